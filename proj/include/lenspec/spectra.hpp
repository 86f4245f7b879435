#pragma once

#include "lenspec/lattice.hpp"
#include "lenspec/series.hpp"

#include <vector>

namespace lenspec {

/// The weight polynomials A_p^(l)(z), 1 <= p <= n, 0 <= l <= n, attaching
/// the zero-count strata of the congruence lattice to the form-degree
/// generating functions.  They depend only on n, never on the orbifold,
/// and deg A_p^(l) <= 2(p-1).
class APolyTable {
public:
    explicit APolyTable(unsigned n);

    unsigned n() const { return n_; }
    const IntPoly& at(unsigned p, unsigned l) const;

private:
    unsigned n_;
    std::vector<std::vector<IntPoly>> a_; // a_[p-1][l]
};

/// Eigenvalue ladder: 0 for p = -1, else (k+p)(k+2n-2-p).
Int lambda_eig(long k, int p, unsigned n);

/// Generating function of one spectral string: the coefficient of z^k is
/// the invariant dimension feeding the eigenvalue lambda_{k+1,p}.
struct HodgeGenFun {
    CanonicalLens L;
    int p = 0; // -1..n-1
    RationalFunction f;
};

/// Closed-form route through the congruence lattice: assembles F^p from the
/// theta strata and the A-table.  p = -1 yields the zero function.
HodgeGenFun hodge_genfun_lattice(const LensParams& L, int p);

/// Character-sum route in Q(zeta_q): series-only, the independent oracle
/// for the lattice route.
TruncatedSeries hodge_genfun_ikeda(const LensParams& L, int p, int K);

/// Normalized 0-spectrum carrier q (z F^0 + 1) / (1 - z^2); equality of
/// this function is equivalent to 0-isospectrality.
RationalFunction ftilde0(const LensParams& L);

/// Same function computed as a raw character sum over Q(zeta_q), truncated;
/// test oracle for ftilde0 and the primitive-block decomposition.
TruncatedSeries ftilde0_series_oracle(const LensParams& L, int K);

/// Block of ftilde0 supported at the primitive d-th roots of unity:
/// sum over h coprime to d of prod_j 1/((z - zeta_d^{h s_j})(z - zeta_d^{-h s_j})).
TruncatedSeries primitive_block_series(unsigned d, const LensParams& L, int K);

struct EigenvalueMult {
    Int lambda;
    Int mult;
    bool operator==(const EigenvalueMult& o) const = default;
};

/// The p-spectrum up to the k-th rung of both strings: eigenvalues with
/// multiplicities, strings merged (coinciding eigenvalues add), zero modes
/// of degree 0 included.
std::vector<EigenvalueMult> multiplicities(const LensParams& L, int p,
                                           int kmax);

/// Denominator-cleared comparison keys: entry p-1 equals
///   (1-z^q)^n * z^p (1-z^2)^(n-1) * (F^(p-1) - (-1)^p z^-p),
/// a plain integer polynomial.  Two orbifolds of equal (q, n) have equal
/// F^(p-1) exactly when these entries coincide.
std::vector<IntPoly> spectral_fingerprint(const PhiProfile& P,
                                          const APolyTable& table);

/// Prefix keys of the power-sum route: entry h equals
///   (1-z^q)^n * sum_l l^h theta^(l),
/// for h = 0..n-1.  Equality for all h <= p0 decides p-isospectrality for
/// every 0 <= p <= p0.
std::vector<IntPoly> power_sum_fingerprint(const PhiProfile& P);

} // namespace lenspec
