#pragma once

#include "lenspec/lens.hpp"
#include "lenspec/rational.hpp"

#include <vector>

namespace lenspec {

/// Reduced one-norm counts of the congruence lattice
///   { a in Z^n : a_1 s_1 + ... + a_n s_n = 0 (mod q) }
/// over the box |a_i| <= q-1, stratified by zero count:
/// phi[l] has coefficient of z^k equal to the number of lattice vectors
/// with one-norm k and exactly l zero coordinates.  This finite table is
/// the complete spectral fingerprint of the orbifold.
struct PhiProfile {
    unsigned q = 1;
    unsigned n = 0;
    std::vector<IntPoly> phi; // index l = 0..n

    bool operator==(const PhiProfile& o) const = default;
};

/// Dynamic program over coordinates with state (partial residue mod q,
/// one-norm so far, zero count so far); never enumerates the (2q-1)^n box.
PhiProfile phi_profile(const LensParams& L);

/// One-norm generating functions per zero-count stratum, as exact rational
/// functions with denominator (1 - z^q)^(n-l), plus their total.
struct ThetaProfile {
    std::vector<RationalFunction> theta; // index l = 0..n
    RationalFunction total;
};

ThetaProfile theta_profile(const PhiProfile& P);

/// Numerator of theta^(l) over (1-z^q)^(n-l):
///   sum_s 2^s binom(l+s, s) z^{sq} phi[l+s].
/// The raw material for denominator-cleared comparisons.
std::vector<IntPoly> theta_numerators(const PhiProfile& P);

/// Exact counts N(k, l) for k <= kmax by direct enumeration of the one-norm
/// ball; the independent oracle for the DP.  Guard: (2 kmax + 1)^n <= 1e8.
struct BruteCounts {
    unsigned kmax = 0;
    unsigned n = 0;
    // counts[k][l]
    std::vector<std::vector<Int>> counts;

    const Int& at(unsigned k, unsigned l) const { return counts[k][l]; }
    Int total(unsigned k) const;
};

BruteCounts brute_counts(const LensParams& L, unsigned kmax);

/// theta^(n-1) from the isotropy data alone:
///   sum_i 2 z^{m_i} / (1 - z^{m_i}),  m_i = q / gcd(q, s_i),
/// m_i being the order of the congruence k s_i = 0 (mod q) on coordinate i
/// and the factor 2 counting both signs of k.  Must agree with the l = n-1
/// component of theta_profile.
RationalFunction theta_nminus1_orbifold(const LensParams& L);

} // namespace lenspec
