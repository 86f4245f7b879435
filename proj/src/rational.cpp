#include "lenspec/rational.hpp"

#include "lenspec/errors.hpp"

#include <utility>

namespace lenspec {

RationalFunction::RationalFunction() : den_(IntPoly::one()) {}

RationalFunction::RationalFunction(IntPoly num, IntPoly den, long zpow)
    : num_(std::move(num)), den_(std::move(den)), zpow_(zpow)
{
    if (den_.is_zero())
        throw zero_denominator();
    canonicalize();
}

RationalFunction RationalFunction::from_poly(IntPoly p, long zpow)
{
    return RationalFunction(std::move(p), IntPoly::one(), zpow);
}

void RationalFunction::canonicalize()
{
    if (num_.is_zero()) {
        den_ = IntPoly::one();
        zpow_ = 0;
        return;
    }
    // Fold z-powers of num and den into the prefactor.
    int a = num_.low_degree();
    int b = den_.low_degree();
    if (a > 0) {
        IntPoly q;
        IntPoly::div_exact(num_, IntPoly::monomial(Int(1), a), q);
        num_ = std::move(q);
    }
    if (b > 0) {
        IntPoly q;
        IntPoly::div_exact(den_, IntPoly::monomial(Int(1), b), q);
        den_ = std::move(q);
    }
    zpow_ += a - b;
    // Positive leading coefficient on den.
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    // Coprime integer contents.
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(),
            den_.content().get_mpz_t());
    if (g > 1) {
        IntPoly qn, qd;
        IntPoly::div_exact(num_, IntPoly::constant(g), qn);
        IntPoly::div_exact(den_, IntPoly::constant(g), qd);
        num_ = std::move(qn);
        den_ = std::move(qd);
    }
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    // Align prefactors at the smaller power.
    long zp = std::min(a.zpow_, b.zpow_);
    IntPoly na = a.num_.shifted(static_cast<unsigned>(a.zpow_ - zp));
    IntPoly nb = b.num_.shifted(static_cast<unsigned>(b.zpow_ - zp));
    return RationalFunction(na * b.den_ + nb * a.den_, a.den_ * b.den_, zp);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero() || b.is_zero())
        return RationalFunction();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_,
                            a.zpow_ + b.zpow_);
}

void RationalFunction::reduce_by(const IntPoly& factor)
{
    if (is_zero() || factor.degree() < 1)
        return;
    IntPoly qn, qd;
    while (IntPoly::div_exact(num_, factor, qn) &&
           IntPoly::div_exact(den_, factor, qd)) {
        num_ = qn;
        den_ = qd;
        if (den_.degree() == 0)
            break;
    }
    canonicalize();
}

void RationalFunction::reduce_by_cyclotomics(const std::vector<unsigned>& ds)
{
    for (unsigned d : ds)
        reduce_by(cyclotomic_poly(d));
}

bool rat_equal(const RationalFunction& f, const RationalFunction& g)
{
    if (f.is_zero() || g.is_zero())
        return f.is_zero() && g.is_zero();
    long zp = std::min(f.zpow(), g.zpow());
    IntPoly lhs = (f.num() * g.den()).shifted(static_cast<unsigned>(f.zpow() - zp));
    IntPoly rhs = (g.num() * f.den()).shifted(static_cast<unsigned>(g.zpow() - zp));
    return lhs == rhs;
}

namespace {

// Primitive part with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p)
{
    if (p.is_zero())
        return p;
    Int c = p.content();
    if (p.leading() < 0)
        c = -c;
    IntPoly q;
    IntPoly::div_exact(p, IntPoly::constant(c), q);
    return q;
}

// Pseudo-remainder of a by b:  lc(b)^(deg a - deg b + 1) * a  mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b)
{
    IntPoly r = a;
    int db = b.degree();
    const Int& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        Int lr = r.leading();
        r *= lb;
        IntPoly t = b.shifted(shift);
        t *= lr;
        r -= t;
    }
    return r;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero())
        return primitive_part(b);
    if (b.is_zero())
        return primitive_part(a);
    Int cont_gcd;
    mpz_gcd(cont_gcd.get_mpz_t(), a.content().get_mpz_t(),
            b.content().get_mpz_t());

    IntPoly f = primitive_part(a);
    IntPoly g = primitive_part(b);
    if (f.degree() < g.degree())
        std::swap(f, g);

    // Subresultant PRS keeps the intermediate coefficients near
    // resultant-sized instead of doubling per step.
    Int h(1), s(1);
    while (true) {
        int delta = f.degree() - g.degree();
        IntPoly r = pseudo_rem(f, g);
        if (r.is_zero())
            break;
        if (r.degree() == 0) {
            g = IntPoly::one();
            break;
        }
        f = g;
        // divisor = s * h^delta
        Int divisor = s * pow_int(h, static_cast<unsigned long>(delta));
        IntPoly q;
        if (!IntPoly::div_exact(r, IntPoly::constant(divisor), q))
            throw error("poly_gcd: subresultant division failed (bug)");
        g = std::move(q);
        s = f.leading();
        // h = s^delta * h^(1-delta)
        if (delta > 0) {
            Int hs = pow_int(s, static_cast<unsigned long>(delta));
            for (int i = 1; i < delta; ++i)
                mpz_divexact(hs.get_mpz_t(), hs.get_mpz_t(), h.get_mpz_t());
            h = hs;
        }
    }
    IntPoly result = primitive_part(g);
    result *= cont_gcd;
    return result;
}

RationalFunction RationalFunction::reduced() const
{
    if (is_zero())
        return *this;
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() < 1)
        return *this;
    IntPoly qn, qd;
    IntPoly::div_exact(num_, g, qn);
    IntPoly::div_exact(den_, g, qd);
    return RationalFunction(std::move(qn), std::move(qd), zpow_);
}

std::string RationalFunction::to_string() const
{
    std::string s = "(" + num_.to_string() + ")";
    if (!den_.is_one())
        s += " / (" + den_.to_string() + ")";
    if (zpow_ != 0)
        s += " * z^" + std::to_string(zpow_);
    return s;
}

} // namespace lenspec
