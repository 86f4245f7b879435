#include "lenspec/spectra.hpp"

#include "lenspec/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lenspec {

APolyTable::APolyTable(unsigned n) : n_(n)
{
    if (n < 2)
        throw input_error("APolyTable: need n >= 2");
    a_.assign(n, std::vector<IntPoly>(n + 1));
    const long N = n;
    for (long p = 1; p <= N; ++p) {
        for (long l = 0; l <= N; ++l) {
            // Coefficient accumulator for powers of z (all even exponents).
            std::vector<Int> acc(2 * p - 1, Int(0));
            for (long j = 1; j <= p; ++j) {
                const int sign = (j % 2 == 1) ? 1 : -1;
                for (long t = 0; 2 * t <= p - j; ++t) {
                    Int c1 = binom(N - p + j + 2 * t, t);
                    if (c1 == 0)
                        continue;
                    for (long beta = 0; beta <= p - j - 2 * t; ++beta) {
                        Int c2 = pow_int(Int(2), static_cast<unsigned long>(
                                                     p - j - 2 * t - beta)) *
                                 binom(N - l, beta) *
                                 binom(l, p - j - 2 * t - beta);
                        if (c2 == 0)
                            continue;
                        for (long alpha = 0; alpha <= beta; ++alpha) {
                            Int c3 = binom(beta, alpha);
                            Int c = c1 * c2 * c3;
                            if (sign < 0)
                                c = -c;
                            for (long i = 0; i <= j - 1; ++i) {
                                long e = 2 * (p - j - t - alpha + i);
                                acc[static_cast<size_t>(e)] += c;
                            }
                        }
                    }
                }
            }
            a_[p - 1][l] = IntPoly(std::move(acc));
        }
    }
}

const IntPoly& APolyTable::at(unsigned p, unsigned l) const
{
    if (p < 1 || p > n_ || l > n_)
        throw input_error("APolyTable::at: index out of range");
    return a_[p - 1][l];
}

Int lambda_eig(long k, int p, unsigned n)
{
    if (p == -1)
        return Int(0);
    if (p < 0 || p > static_cast<int>(n) - 1)
        throw input_error("lambda_eig: p out of range");
    return Int(k + p) * Int(k + 2 * static_cast<long>(n) - 2 - p);
}

namespace {

std::vector<unsigned> divisors_of(unsigned q)
{
    std::vector<unsigned> ds;
    for (unsigned d = 1; d <= q; ++d)
        if (q % d == 0)
            ds.push_back(d);
    return ds;
}

std::vector<unsigned> reduction_hints(unsigned q)
{
    std::vector<unsigned> ds = divisors_of(q);
    if (std::find(ds.begin(), ds.end(), 2u) == ds.end())
        ds.push_back(2);
    return ds; // 1 always divides q
}

} // namespace

HodgeGenFun hodge_genfun_lattice(const LensParams& L, int p)
{
    const unsigned n = L.n();
    if (p < -1 || p >= static_cast<int>(n))
        throw input_error("hodge_genfun_lattice: p out of range");
    CanonicalLens C = canonical_form(L);
    if (p == -1)
        return {std::move(C), p, RationalFunction::zero()};

    const unsigned q = L.q();
    PhiProfile P = phi_profile(L);
    APolyTable table(n);
    std::vector<IntPoly> num = theta_numerators(P);
    const IntPoly omzq = IntPoly::one_minus_zq(q);

    // Row p+1 of the table produces F^p.  Clear all denominators:
    //   F^p = [ sum_l A_{p+1}^(l) num_l (1-z^q)^l
    //           + (-1)^(p+1) (1-z^2)^(n-1) (1-z^q)^n ]
    //         / ( z^(p+1) (1-z^2)^(n-1) (1-z^q)^n ).
    const unsigned row = static_cast<unsigned>(p) + 1;
    IntPoly acc;
    for (unsigned l = 0; l <= n; ++l) {
        if (num[l].is_zero())
            continue;
        acc += table.at(row, l) * num[l] * omzq.pow(l);
    }
    IntPoly correction =
        IntPoly::one_minus_zq(2).pow(n - 1) * omzq.pow(n);
    if (row % 2 == 1)
        correction = -correction;
    acc += correction;

    RationalFunction f(std::move(acc),
                       IntPoly::one_minus_zq(2).pow(n - 1) * omzq.pow(n),
                       -static_cast<long>(row));
    f.reduce_by_cyclotomics(reduction_hints(q));
    return {std::move(C), p, std::move(f)};
}

namespace {

// det(z - gamma^h) as a polynomial of degree 2n over Q(zeta_q): the
// eigenvalues of gamma^h are zeta^(+-h s_j).
CycloSeries det_poly(const std::shared_ptr<const CycloField>& F,
                     const LensParams& L, unsigned h, int order)
{
    CycloSeries d(F, order);
    d.coeff(0) = F->one();
    for (unsigned j = 0; j < L.n(); ++j) {
        for (int sgn : {+1, -1}) {
            long e = sgn * static_cast<long>(h) * static_cast<long>(L.s()[j]);
            CycloElem root = F->zeta_pow(e);
            // multiply by (z - root)
            CycloSeries next(F, order);
            for (int k = order; k >= 0; --k) {
                CycloElem v = d.coeff(k) * (root * Rat(-1));
                if (k >= 1)
                    v += d.coeff(k - 1);
                next.coeff(k) = v;
            }
            d = next;
        }
    }
    return d;
}

} // namespace

TruncatedSeries hodge_genfun_ikeda(const LensParams& L, int p, int K)
{
    const unsigned n = L.n();
    const unsigned q = L.q();
    if (p < -1 || p >= static_cast<int>(n))
        throw input_error("hodge_genfun_ikeda: p out of range");
    if (K < 0)
        throw input_error("hodge_genfun_ikeda: negative order");
    if (p == -1)
        return TruncatedSeries::zero(K);

    auto F = CycloField::make(q);
    // Work far enough above K to absorb the z^(k-p) shifts and the final
    // division by z.
    const int pad = p + 2;
    const int inner = K + pad;

    // T_k = sum_h chi^k(gamma^h) / det(z - gamma^h), chi^k read off the
    // coefficients of det itself: for eigenvalues lam_i,
    // prod (z - lam_i) = sum_j (-1)^(2n-j) e_{2n-j} z^j.
    const unsigned chi_max = static_cast<unsigned>(p);
    std::vector<CycloSeries> T(chi_max + 1, CycloSeries(F, inner));
    for (unsigned h = 0; h < q; ++h) {
        CycloSeries det = det_poly(F, L, h, std::max<int>(inner, 2 * n));
        CycloSeries inv = det.inverse();
        CycloSeries inv_trunc(F, inner);
        for (int k = 0; k <= inner; ++k)
            inv_trunc.coeff(k) = inv.coeff(k);
        for (unsigned k = 0; k <= chi_max; ++k) {
            CycloElem ek = det.coeff(static_cast<int>(2 * n - k));
            if (k % 2 == 1)
                ek = ek * Rat(-1);
            if (!ek.is_zero())
                T[k] += inv_trunc.scaled(ek);
        }
    }

    // Laurent accumulator with exponents offset by -p.
    std::vector<Rat> laurent(static_cast<size_t>(inner + p + 1), Rat(0));
    auto add_at = [&](long e, const Rat& v) {
        long pos = e + p;
        if (pos >= 0 && pos < static_cast<long>(laurent.size()))
            laurent[static_cast<size_t>(pos)] += v;
    };

    if (p == 0) {
        // F^0 = (1/z) ( (1-z^2)/q * T_0 - 1 ); the 1/z is applied by the
        // common shift at the end.
        TruncatedSeries t0 = T[0].as_rational_series();
        for (int k = 0; k <= inner; ++k) {
            Rat v = t0.coeff(k) / q;
            add_at(k, v);
            add_at(k + 2, -v);
        }
        add_at(0, Rat(-1));
    } else {
        // (-1)^(p+1) z^(-p) + (1/q) sum_k (-1)^(p-k) (z^(k-p) - z^(p-k+2)) T_k.
        // As printed this sum is one z-power above the indexing used here
        // (its k-th coefficient feeds lambda_{k,p+1} rather than
        // lambda_{k+1,p+1}); the same trailing shift aligns it.
        add_at(-p, (p % 2 == 0) ? Rat(-1) : Rat(1));
        for (unsigned k = 0; k <= chi_max; ++k) {
            TruncatedSeries tk = T[k].as_rational_series();
            Rat sign((static_cast<unsigned>(p) - k) % 2 == 0 ? 1 : -1);
            for (int m = 0; m <= inner; ++m) {
                Rat v = sign * tk.coeff(m) / q;
                add_at(m + static_cast<long>(k) - p, v);
                add_at(m + static_cast<long>(p) - k + 2, -v);
            }
        }
    }

    // Everything below z^1 must have cancelled before the final shift.
    for (int e = -p; e <= 0; ++e) {
        const Rat& v = laurent[static_cast<size_t>(e + p)];
        if (v != 0)
            throw not_rational(
                "hodge_genfun_ikeda: nonpositive power survived the sum");
    }
    std::vector<Rat> out(K + 1, Rat(0));
    for (int k = 0; k <= K; ++k)
        out[k] = laurent[static_cast<size_t>(k + 1 + p)];
    return TruncatedSeries(std::move(out), K);
}

RationalFunction ftilde0(const LensParams& L)
{
    // q (z F^0 + 1) / (1 - z^2) collapses to q * theta_total / (1-z^2)^n.
    PhiProfile P = phi_profile(L);
    ThetaProfile T = theta_profile(P);
    RationalFunction f =
        RationalFunction::from_poly(IntPoly::constant(Int(L.q())));
    f *= T.total;
    f *= RationalFunction(IntPoly::one(), IntPoly::one_minus_zq(2).pow(L.n()));
    f.reduce_by_cyclotomics(reduction_hints(L.q()));
    return f;
}

TruncatedSeries ftilde0_series_oracle(const LensParams& L, int K)
{
    auto F = CycloField::make(L.q());
    return cyclo_average_series(L.q(), K, [&](unsigned h) {
        CycloSeries det = det_poly(F, L, h, std::max<int>(K, 2 * L.n()));
        CycloSeries inv = det.inverse();
        CycloSeries trunc(F, K);
        for (int k = 0; k <= K; ++k)
            trunc.coeff(k) = inv.coeff(k);
        return trunc;
    });
}

TruncatedSeries primitive_block_series(unsigned d, const LensParams& L, int K)
{
    auto F = CycloField::make(d);
    CycloSeries acc(F, K);
    for (unsigned h = 0; h < d; ++h) {
        if (std::gcd(h == 0 ? d : h, d) != 1)
            continue;
        // Same product as ftilde0, with roots of order d.
        CycloSeries det(F, std::max<int>(K, 2 * static_cast<int>(L.n())));
        det.coeff(0) = F->one();
        for (unsigned j = 0; j < L.n(); ++j) {
            for (int sgn : {+1, -1}) {
                long e =
                    sgn * static_cast<long>(h) * static_cast<long>(L.s()[j]);
                CycloElem root = F->zeta_pow(e);
                CycloSeries next(F, det.order());
                for (int k = det.order(); k >= 0; --k) {
                    CycloElem v = det.coeff(k) * (root * Rat(-1));
                    if (k >= 1)
                        v += det.coeff(k - 1);
                    next.coeff(k) = v;
                }
                det = next;
            }
        }
        CycloSeries inv = det.inverse();
        CycloSeries trunc(F, K);
        for (int k = 0; k <= K; ++k)
            trunc.coeff(k) = inv.coeff(k);
        acc += trunc;
    }
    return acc.as_rational_series();
}

std::vector<EigenvalueMult> multiplicities(const LensParams& L, int p,
                                           int kmax)
{
    const unsigned n = L.n();
    if (p < 0 || p >= static_cast<int>(n))
        throw input_error("multiplicities: p out of range");
    if (kmax < 1)
        throw input_error("multiplicities: kmax must be >= 1");

    std::map<Int, Int> spec;
    // Harmonic p-forms: for p = 0 the constants contribute the zero
    // eigenvalue (the p-1 string collapses there by the F^(-1) = 0
    // convention); positive form degrees on these rational homology
    // spheres carry no zero modes.
    if (p == 0)
        spec[Int(0)] = 1;

    HodgeGenFun lower = hodge_genfun_lattice(L, p - 1);
    HodgeGenFun upper = hodge_genfun_lattice(L, p);
    TruncatedSeries slo = series_expand(lower.f, kmax - 1);
    TruncatedSeries sup = series_expand(upper.f, kmax - 1);
    for (long k = 1; k <= kmax; ++k) {
        const Rat& mlo = slo.coeff(static_cast<int>(k - 1));
        const Rat& mup = sup.coeff(static_cast<int>(k - 1));
        if (mlo.get_den() != 1 || mup.get_den() != 1)
            throw error("multiplicities: non-integer invariant dimension");
        if (mlo != 0)
            spec[lambda_eig(k, p - 1, n)] += mlo.get_num();
        if (mup != 0)
            spec[lambda_eig(k, p, n)] += mup.get_num();
    }

    std::vector<EigenvalueMult> out;
    out.reserve(spec.size());
    for (auto& [lam, mult] : spec)
        if (mult != 0)
            out.push_back({lam, mult});
    return out;
}

std::vector<IntPoly> spectral_fingerprint(const PhiProfile& P,
                                          const APolyTable& table)
{
    if (table.n() != P.n)
        throw dimension_mismatch("spectral_fingerprint: table size mismatch");
    const unsigned n = P.n;
    std::vector<IntPoly> num = theta_numerators(P);
    const IntPoly omzq = IntPoly::one_minus_zq(P.q);
    std::vector<IntPoly> omzq_pow(n + 1);
    omzq_pow[0] = IntPoly::one();
    for (unsigned l = 1; l <= n; ++l)
        omzq_pow[l] = omzq_pow[l - 1] * omzq;

    std::vector<IntPoly> G(n);
    for (unsigned row = 1; row <= n; ++row) {
        IntPoly acc;
        for (unsigned l = 0; l <= n; ++l) {
            if (num[l].is_zero())
                continue;
            acc += table.at(row, l) * num[l] * omzq_pow[l];
        }
        G[row - 1] = std::move(acc);
    }
    return G;
}

std::vector<IntPoly> power_sum_fingerprint(const PhiProfile& P)
{
    const unsigned n = P.n;
    std::vector<IntPoly> num = theta_numerators(P);
    const IntPoly omzq = IntPoly::one_minus_zq(P.q);
    std::vector<IntPoly> omzq_pow(n + 1);
    omzq_pow[0] = IntPoly::one();
    for (unsigned l = 1; l <= n; ++l)
        omzq_pow[l] = omzq_pow[l - 1] * omzq;

    std::vector<IntPoly> H(n);
    for (unsigned h = 0; h < n; ++h) {
        IntPoly acc;
        for (unsigned l = 0; l <= n; ++l) {
            if (num[l].is_zero())
                continue;
            Int w = (h == 0) ? Int(1) : pow_int(Int(l), h);
            if (w == 0)
                continue;
            IntPoly term = num[l] * omzq_pow[l];
            term *= w;
            acc += term;
        }
        H[h] = std::move(acc);
    }
    return H;
}

} // namespace lenspec
