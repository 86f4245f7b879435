#include "lenspec/series.hpp"

#include "lenspec/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lenspec {

namespace {
const Rat k_zero_rat(0);
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs, int order)
    : c_(std::move(coeffs)), order_(order)
{
    if (order_ < 0)
        throw input_error("TruncatedSeries: negative order");
    c_.resize(order_ + 1, Rat(0));
    for (auto& v : c_)
        v.canonicalize();
}

TruncatedSeries TruncatedSeries::zero(int order)
{
    return TruncatedSeries(std::vector<Rat>(), order);
}

const Rat& TruncatedSeries::coeff(int k) const
{
    if (k < 0 || k > order_)
        return k_zero_rat;
    return c_[k];
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    int ord = std::min(a.order_, b.order_);
    std::vector<Rat> c(ord + 1);
    for (int k = 0; k <= ord; ++k)
        c[k] = a.c_[k] + b.c_[k];
    return TruncatedSeries(std::move(c), ord);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    int ord = std::min(a.order_, b.order_);
    std::vector<Rat> c(ord + 1);
    for (int k = 0; k <= ord; ++k)
        c[k] = a.c_[k] - b.c_[k];
    return TruncatedSeries(std::move(c), ord);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    int ord = std::min(a.order_, b.order_);
    std::vector<Rat> c(ord + 1, Rat(0));
    for (int i = 0; i <= ord; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (b.c_[j] == 0)
                continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return TruncatedSeries(std::move(c), ord);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const
{
    return order_ == o.order_ && c_ == o.c_;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o) const
{
    int ord = std::min(order_, o.order_);
    for (int k = 0; k <= ord; ++k)
        if (c_[k] != o.c_[k])
            return false;
    return true;
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    std::vector<Rat> c(c_.begin(),
                       c_.begin() + std::min<size_t>(c_.size(), order + 1));
    return TruncatedSeries(std::move(c), order);
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        if (c_[k] == 0)
            continue;
        if (!first)
            os << " + ";
        os << c_[k].get_str();
        if (k > 0)
            os << "*z^" << k;
        first = false;
    }
    if (first)
        os << "0";
    os << " + O(z^" << order_ + 1 << ")";
    return os.str();
}

TruncatedSeries series_expand(const RationalFunction& f, int K)
{
    if (K < 0)
        throw input_error("series_expand: negative order");
    if (f.is_zero())
        return TruncatedSeries::zero(K);

    long zp = f.zpow();
    // Expand num/den to order K + max(0, -zp), then shift by zp.
    int inner = K + static_cast<int>(std::max(0L, -zp));
    const IntPoly& num = f.num();
    const IntPoly& den = f.den();
    if (den.coeff(0) == 0)
        throw non_expandable(
            "series_expand: denominator constant term vanishes beyond the "
            "declared z-power prefactor");

    Rat d0(den.coeff(0));
    std::vector<Rat> c(inner + 1, Rat(0));
    for (int k = 0; k <= inner; ++k) {
        Rat acc(num.coeff(k));
        int jmax = std::min(k, den.degree());
        for (int j = 1; j <= jmax; ++j) {
            if (den.coeff(j) == 0)
                continue;
            acc -= Rat(den.coeff(j)) * c[k - j];
        }
        acc /= d0;
        acc.canonicalize();
        c[k] = std::move(acc);
    }

    std::vector<Rat> out(K + 1, Rat(0));
    for (int k = 0; k <= inner; ++k) {
        long target = k + zp;
        if (target < 0) {
            if (c[k] != 0)
                throw non_expandable(
                    "series_expand: pole at z = 0 (negative-power "
                    "coefficient does not vanish)");
            continue;
        }
        if (target <= K)
            out[static_cast<size_t>(target)] = c[k];
    }
    return TruncatedSeries(std::move(out), K);
}

} // namespace lenspec
