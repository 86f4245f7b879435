#include "lenspec/cyclotomic.hpp"

#include "lenspec/errors.hpp"

namespace lenspec {

CycloField::CycloField(unsigned q) : q_(q)
{
    if (q == 0)
        throw input_error("CycloField: q must be positive");
    phi_ = cyclotomic_poly(q);
    dim_ = static_cast<unsigned>(phi_.degree());
    // z^dim = -(phi_0 + phi_1 z + ... + phi_{dim-1} z^{dim-1});  Phi_q is
    // monic, so the table stays integral, stored as rationals for reuse.
    if (dim_ >= 1) {
        std::vector<Rat> base(dim_);
        for (unsigned i = 0; i < dim_; ++i)
            base[i] = Rat(-phi_.coeff(static_cast<int>(i)));
        reduction_.push_back(base);
        for (unsigned j = 1; j + 1 < dim_; ++j) {
            // z^(dim+j) = z * z^(dim+j-1)
            const std::vector<Rat>& prev = reduction_.back();
            std::vector<Rat> next(dim_, Rat(0));
            const Rat& top = prev[dim_ - 1];
            for (unsigned i = 0; i + 1 < dim_; ++i)
                next[i + 1] = prev[i];
            if (top != 0)
                for (unsigned i = 0; i < dim_; ++i)
                    next[i] += top * base[i];
            for (auto& v : next)
                v.canonicalize();
            reduction_.push_back(std::move(next));
        }
    }
}

std::shared_ptr<const CycloField> CycloField::make(unsigned q)
{
    return std::shared_ptr<const CycloField>(new CycloField(q));
}

CycloElem::CycloElem(std::shared_ptr<const CycloField> f,
                     std::vector<Rat> coords)
    : field_(std::move(f)), coords_(std::move(coords))
{
    coords_.resize(field_->dim(), Rat(0));
    for (auto& v : coords_)
        v.canonicalize();
}

CycloElem CycloField::zero() const
{
    return CycloElem(shared_from_this(), {});
}

CycloElem CycloField::one() const
{
    return from_rational(Rat(1));
}

CycloElem CycloField::from_rational(Rat v) const
{
    std::vector<Rat> c(dim_, Rat(0));
    c[0] = std::move(v);
    return CycloElem(shared_from_this(), std::move(c));
}

CycloElem CycloField::zeta_pow(long e) const
{
    long r = e % static_cast<long>(q_);
    if (r < 0)
        r += q_;
    auto k = static_cast<unsigned>(r);
    std::vector<Rat> c(dim_, Rat(0));
    if (k < dim_) {
        c[k] = 1;
    } else {
        // z^k for dim <= k < q: start at z^(dim-1) and multiply by z,
        // reducing through the table at each step.
        c[dim_ - 1] = 1;
        for (unsigned step = dim_ - 1; step < k; ++step) {
            // multiply by z
            Rat top = c[dim_ - 1];
            for (unsigned i = dim_ - 1; i > 0; --i)
                c[i] = c[i - 1];
            c[0] = 0;
            if (top != 0)
                for (unsigned i = 0; i < dim_; ++i)
                    c[i] += top * reduction_[0][i];
        }
        for (auto& v : c)
            v.canonicalize();
    }
    return CycloElem(shared_from_this(), std::move(c));
}

bool CycloElem::is_zero() const
{
    for (const auto& v : coords_)
        if (v != 0)
            return false;
    return true;
}

bool CycloElem::is_rational() const
{
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            return false;
    return true;
}

Rat CycloElem::as_rational() const
{
    if (!is_rational())
        throw not_rational("cyclotomic element is not rational");
    return coords_.empty() ? Rat(0) : coords_[0];
}

namespace {
// Fields of equal conductor are structurally identical, so elements built
// in distinct contexts of the same q interoperate.
void check_same_field(const CycloElem& a, const CycloElem& b)
{
    if (a.field()->conductor() != b.field()->conductor())
        throw input_error("cyclotomic elements from different fields");
}
} // namespace

CycloElem operator+(const CycloElem& a, const CycloElem& b)
{
    check_same_field(a, b);
    std::vector<Rat> c(a.coords_);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += b.coords_[i];
    return CycloElem(a.field_, std::move(c));
}

CycloElem operator-(const CycloElem& a, const CycloElem& b)
{
    check_same_field(a, b);
    std::vector<Rat> c(a.coords_);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] -= b.coords_[i];
    return CycloElem(a.field_, std::move(c));
}

CycloElem operator*(const CycloElem& a, const CycloElem& b)
{
    check_same_field(a, b);
    const CycloField& F = *a.field_;
    unsigned dim = F.dim();
    std::vector<Rat> raw(2 * dim - 1, Rat(0));
    for (unsigned i = 0; i < dim; ++i) {
        if (a.coords_[i] == 0)
            continue;
        for (unsigned j = 0; j < dim; ++j) {
            if (b.coords_[j] == 0)
                continue;
            raw[i + j] += a.coords_[i] * b.coords_[j];
        }
    }
    std::vector<Rat> c(raw.begin(), raw.begin() + dim);
    for (unsigned j = 0; j + 1 < dim; ++j) {
        const Rat& hi = raw[dim + j];
        if (hi == 0)
            continue;
        const auto& row = F.reduction_row(j);
        for (unsigned i = 0; i < dim; ++i)
            c[i] += hi * row[i];
    }
    return CycloElem(a.field_, std::move(c));
}

CycloElem CycloElem::operator*(const Rat& k) const
{
    std::vector<Rat> c(coords_);
    for (auto& v : c)
        v *= k;
    return CycloElem(field_, std::move(c));
}

bool CycloElem::operator==(const CycloElem& o) const
{
    check_same_field(*this, o);
    return coords_ == o.coords_;
}

Rat cyclo_average(unsigned q, const std::function<CycloElem(unsigned)>& term)
{
    auto F = CycloField::make(q);
    CycloElem acc = F->zero();
    for (unsigned h = 0; h < q; ++h)
        acc = acc + term(h);
    return acc.as_rational();
}

CycloSeries::CycloSeries(std::shared_ptr<const CycloField> f, int order)
    : field_(std::move(f)), order_(order)
{
    if (order_ < 0)
        throw input_error("CycloSeries: negative order");
    c_.assign(order_ + 1, field_->zero());
}

CycloSeries operator+(const CycloSeries& a, const CycloSeries& b)
{
    int ord = std::min(a.order_, b.order_);
    CycloSeries r(a.field_, ord);
    for (int k = 0; k <= ord; ++k)
        r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

CycloSeries operator*(const CycloSeries& a, const CycloSeries& b)
{
    int ord = std::min(a.order_, b.order_);
    CycloSeries r(a.field_, ord);
    for (int i = 0; i <= ord; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (b.c_[j].is_zero())
                continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

CycloSeries CycloSeries::scaled(const CycloElem& k) const
{
    CycloSeries r(field_, order_);
    for (int i = 0; i <= order_; ++i)
        r.c_[i] = c_[i] * k;
    return r;
}

CycloSeries CycloSeries::inverse() const
{
    // c_0 must be invertible; the only constant terms this library inverts
    // are products of roots of unity, i.e. +-zeta^e, so invert by the
    // rational reciprocal when the constant term is rational and reject
    // otherwise (nothing in the oracles needs the general field inverse).
    Rat c0 = c_[0].as_rational();
    if (c0 == 0)
        throw non_expandable("CycloSeries: constant term is zero");
    Rat c0inv = 1 / c0;
    CycloSeries r(field_, order_);
    r.c_[0] = field_->from_rational(c0inv);
    for (int k = 1; k <= order_; ++k) {
        CycloElem acc = field_->zero();
        for (int j = 1; j <= k; ++j) {
            if (c_[j].is_zero())
                continue;
            acc += c_[j] * r.c_[k - j];
        }
        r.c_[k] = acc * (-c0inv);
    }
    return r;
}

TruncatedSeries CycloSeries::as_rational_series() const
{
    std::vector<Rat> c(order_ + 1);
    for (int k = 0; k <= order_; ++k)
        c[k] = c_[k].as_rational();
    return TruncatedSeries(std::move(c), order_);
}

TruncatedSeries
cyclo_average_series(unsigned q, int order,
                     const std::function<CycloSeries(unsigned)>& term)
{
    auto F = CycloField::make(q);
    CycloSeries acc(F, order);
    for (unsigned h = 0; h < q; ++h)
        acc += term(h);
    return acc.as_rational_series();
}

} // namespace lenspec
