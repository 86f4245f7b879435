#include "lenspec/intpoly.hpp"

#include "lenspec/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lenspec {

namespace {
const Int k_zero(0);
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly IntPoly::constant(Int v)
{
    IntPoly p;
    if (v != 0)
        p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(Int v, unsigned deg)
{
    IntPoly p;
    if (v != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = std::move(v);
    }
    return p;
}

IntPoly IntPoly::one_minus_zq(unsigned q)
{
    IntPoly p;
    p.c_.assign(q + 1, Int(0));
    p.c_[0] = 1;
    p.c_[q] = -1;
    return p;
}

const Int& IntPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return k_zero;
    return c_[k];
}

const Int& IntPoly::leading() const
{
    if (c_.empty())
        return k_zero;
    return c_.back();
}

int IntPoly::low_degree() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return 0;
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0)
                continue;
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                       b.c_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

IntPoly& IntPoly::operator*=(const Int& k)
{
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_)
        v *= k;
    return *this;
}

IntPoly IntPoly::shifted(unsigned k) const
{
    if (is_zero() || k == 0)
        return *this;
    IntPoly r;
    r.c_.assign(c_.size() + k, Int(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

IntPoly IntPoly::pow(unsigned e) const
{
    IntPoly r = one();
    IntPoly base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

Int IntPoly::eval(const Int& x) const
{
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Int IntPoly::content() const
{
    Int g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

bool IntPoly::divide_in_z(const IntPoly& a, const IntPoly& b, IntPoly& q,
                          IntPoly& r)
{
    if (b.is_zero())
        throw zero_denominator();
    IntPoly rem = a;
    IntPoly quot;
    int db = b.degree();
    if (rem.degree() >= db)
        quot.c_.assign(rem.degree() - db + 1, Int(0));
    const Int& lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        Int qc, sc;
        mpz_tdiv_qr(qc.get_mpz_t(), sc.get_mpz_t(),
                    rem.leading().get_mpz_t(), lb.get_mpz_t());
        if (sc != 0)
            return false;
        int shift = rem.degree() - db;
        quot.c_[shift] = qc;
        // rem -= qc * z^shift * b
        for (int i = 0; i <= db; ++i)
            mpz_submul(rem.c_[i + shift].get_mpz_t(), qc.get_mpz_t(),
                       b.c_[i].get_mpz_t());
        rem.trim();
    }
    quot.trim();
    q = std::move(quot);
    r = std::move(rem);
    return true;
}

bool IntPoly::div_exact(const IntPoly& a, const IntPoly& b, IntPoly& q)
{
    IntPoly quot, rem;
    if (!divide_in_z(a, b, quot, rem))
        return false;
    if (!rem.is_zero())
        return false;
    q = std::move(quot);
    return true;
}

std::strong_ordering IntPoly::operator<=>(const IntPoly& o) const
{
    if (c_.size() != o.c_.size())
        return c_.size() <=> o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        int c = mpz_cmp(c_[i].get_mpz_t(), o.c_[i].get_mpz_t());
        if (c != 0)
            return c <=> 0;
    }
    return std::strong_ordering::equal;
}

std::string IntPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        Int av = abs(c_[i]);
        if (first) {
            if (c_[i] < 0)
                os << "-";
            first = false;
        } else {
            os << (c_[i] < 0 ? " - " : " + ");
        }
        if (i == 0 || av != 1)
            os << av.get_str();
        if (i > 0) {
            if (av != 1)
                os << "*";
            os << "z";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

IntPoly cyclotomic_poly(unsigned q)
{
    if (q == 0)
        throw input_error("cyclotomic_poly: q must be positive");
    if (q == 1)
        return IntPoly({Int(-1), Int(1)}); // z - 1
    // (z^q - 1) / prod_{d | q, d < q} Phi_d
    IntPoly num;
    {
        std::vector<Int> c(q + 1, Int(0));
        c[0] = -1;
        c[q] = 1;
        num = IntPoly(std::move(c));
    }
    IntPoly den = IntPoly::one();
    for (unsigned d = 1; d < q; ++d)
        if (q % d == 0)
            den = den * cyclotomic_poly(d);
    IntPoly quot;
    if (!IntPoly::div_exact(num, den, quot))
        throw error("cyclotomic_poly: non-exact division (bug)");
    return quot;
}

} // namespace lenspec
