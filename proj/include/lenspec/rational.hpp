#pragma once

#include "lenspec/intpoly.hpp"

#include <string>
#include <vector>

namespace lenspec {

/// Quotient of integer polynomials times an explicit power of z, so the
/// z^{-p} prefactors of the spectral generating functions never force a
/// Laurent representation onto IntPoly.
///
/// Canonical form kept by every constructor and operator: den is nonzero
/// with positive leading coefficient, num and den have nonzero constant
/// terms (their z-powers are folded into zpow), and the integer contents of
/// num and den are coprime.  num/den is NOT polynomial-gcd-reduced in
/// general; equality is decided by cross-multiplication and full reduction
/// is applied on stored values only (reduced(), reduce_by()).
class RationalFunction {
public:
    /// Zero.
    RationalFunction();
    RationalFunction(IntPoly num, IntPoly den, long zpow = 0);
    static RationalFunction from_poly(IntPoly p, long zpow = 0);
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return from_poly(IntPoly::one()); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    long zpow() const { return zpow_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a,
                                      const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a,
                                      const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a,
                                      const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    /// Divide num and den by `factor` as long as both stay divisible.
    void reduce_by(const IntPoly& factor);
    /// Divide out every common cyclotomic factor Phi_d for the given d's.
    /// Complete reduction whenever den is (up to sign and z-powers) a
    /// product of those cyclotomic polynomials.
    void reduce_by_cyclotomics(const std::vector<unsigned>& ds);
    /// Fully gcd-reduced copy (subresultant remainder sequence).  Meant for
    /// stored/serialized values, not for bulk equality testing.
    RationalFunction reduced() const;

    std::string to_string() const;

private:
    void canonicalize();
    IntPoly num_, den_;
    long zpow_ = 0;
};

/// Exact equality as rational functions, decided by cross-multiplication of
/// integer polynomials after aligning the z-power prefactors.
bool rat_equal(const RationalFunction& f, const RationalFunction& g);

/// Polynomial gcd over Z[z] (primitive, positive leading coefficient),
/// computed with the subresultant polynomial remainder sequence.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

} // namespace lenspec
