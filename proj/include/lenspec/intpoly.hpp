#pragma once

#include "lenspec/numeric.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace lenspec {

/// Dense univariate polynomial over Z with arbitrary-precision
/// coefficients.  coeffs()[k] is the coefficient of z^k; the zero
/// polynomial is the empty coefficient vector, otherwise the leading
/// coefficient is nonzero (canonical trimming).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int v);
    static IntPoly one() { return constant(Int(1)); }
    /// v * z^deg
    static IntPoly monomial(Int v, unsigned deg);
    /// 1 - z^q
    static IntPoly one_minus_zq(unsigned q);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// 0 outside the stored range.
    const Int& coeff(int k) const;
    std::span<const Int> coeffs() const { return c_; }
    const Int& leading() const;

    /// Lowest k with nonzero coefficient; 0 for the zero polynomial.
    int low_degree() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly& operator*=(const Int& k);

    /// * z^k
    IntPoly shifted(unsigned k) const;
    IntPoly pow(unsigned e) const;
    Int eval(const Int& x) const;
    /// gcd of coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;

    /// Quotient and remainder of Euclidean division when it stays in Z[z]:
    /// each elimination step must divide exactly by the leading coefficient
    /// of b.  Returns false (leaving q, r untouched) when it does not.
    static bool divide_in_z(const IntPoly& a, const IntPoly& b, IntPoly& q,
                            IntPoly& r);
    /// Exact division; returns false when b does not divide a over Z[z].
    static bool div_exact(const IntPoly& a, const IntPoly& b, IntPoly& q);

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    /// Degree-then-coefficient order; used for deterministic map keys.
    std::strong_ordering operator<=>(const IntPoly& o) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Int> c_;
};

/// q-th cyclotomic polynomial, computed by exact division of z^q - 1 by the
/// cyclotomic polynomials of the proper divisors of q.
IntPoly cyclotomic_poly(unsigned q);

} // namespace lenspec
