#include "lenspec/lattice.hpp"

#include "lenspec/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>

namespace lenspec {

PhiProfile phi_profile(const LensParams& L)
{
    const unsigned q = L.q();
    const unsigned n = L.n();
    const unsigned kmax = n * (q - 1); // one-norm bound inside the box

    // Cell values are counts of partial vectors, so every intermediate is
    // bounded by (2q-1)^n; insist that this fits a 64-bit counter.
    if (n * std::log2(2.0 * q - 1.0) > 62.0)
        throw too_large("phi_profile: counts may exceed 64-bit range at q=" +
                        std::to_string(q) + ", n=" + std::to_string(n));

    const size_t norm_dim = kmax + 1;
    const size_t layer = (n + 1) * norm_dim; // per-residue block
    std::vector<std::uint64_t> cur(q * layer, 0), nxt(q * layer, 0);
    auto idx = [&](unsigned r, unsigned l) -> size_t {
        return r * layer + l * norm_dim;
    };
    cur[idx(0, 0)] = 1;

    for (unsigned j = 0; j < n; ++j) {
        std::fill(nxt.begin(), nxt.end(), 0);
        const unsigned sj = L.s()[j] % q;
        for (long a = -static_cast<long>(q - 1); a <= static_cast<long>(q - 1);
             ++a) {
            const auto da = static_cast<unsigned>(a < 0 ? -a : a);
            const unsigned dl = (a == 0) ? 1u : 0u;
            long rs = (a * static_cast<long>(sj)) % static_cast<long>(q);
            if (rs < 0)
                rs += q;
            const auto dr = static_cast<unsigned>(rs);
            for (unsigned r = 0; r < q; ++r) {
                const unsigned r2 = (r + dr) % q;
                for (unsigned l = 0; l <= j; ++l) {
                    const std::uint64_t* src = &cur[idx(r, l)];
                    std::uint64_t* dst = &nxt[idx(r2, l + dl)] + da;
                    for (size_t k = 0; k + da < norm_dim; ++k)
                        dst[k] += src[k];
                }
            }
        }
        std::swap(cur, nxt);
    }

    PhiProfile P;
    P.q = q;
    P.n = n;
    P.phi.reserve(n + 1);
    for (unsigned l = 0; l <= n; ++l) {
        std::vector<Int> coeffs(norm_dim);
        const std::uint64_t* src = &cur[idx(0, l)];
        for (size_t k = 0; k < norm_dim; ++k)
            coeffs[k] = Int(static_cast<unsigned long>(src[k]));
        P.phi.emplace_back(std::move(coeffs));
    }
    return P;
}

std::vector<IntPoly> theta_numerators(const PhiProfile& P)
{
    const unsigned n = P.n;
    const unsigned q = P.q;
    std::vector<IntPoly> num(n + 1);
    for (unsigned l = 0; l <= n; ++l) {
        IntPoly acc;
        for (unsigned s = 0; s + l <= n; ++s) {
            Int c = pow_int(Int(2), s) * binom(l + s, s);
            IntPoly term = P.phi[l + s];
            term *= c;
            acc += term.shifted(s * q);
        }
        num[l] = std::move(acc);
    }
    return num;
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

} // namespace

ThetaProfile theta_profile(const PhiProfile& P)
{
    const unsigned n = P.n;
    const unsigned q = P.q;
    std::vector<IntPoly> num = theta_numerators(P);
    const IntPoly omz = IntPoly::one_minus_zq(q);
    const std::vector<unsigned> hints = divisors_of(q);

    ThetaProfile T;
    T.theta.reserve(n + 1);
    for (unsigned l = 0; l <= n; ++l) {
        RationalFunction f(num[l], omz.pow(n - l));
        f.reduce_by_cyclotomics(hints);
        T.theta.push_back(std::move(f));
    }

    // Total: sum_t z^{tq} sum_{l>=t} binom(l, t) phi[l] over (1-z^q)^n.
    IntPoly tot;
    for (unsigned t = 0; t <= n; ++t) {
        IntPoly inner;
        for (unsigned l = t; l <= n; ++l) {
            IntPoly term = P.phi[l];
            term *= binom(l, t);
            inner += term;
        }
        tot += inner.shifted(t * q);
    }
    RationalFunction total(tot, omz.pow(n));
    total.reduce_by_cyclotomics(hints);
    T.total = std::move(total);
    return T;
}

Int BruteCounts::total(unsigned k) const
{
    Int t(0);
    for (const auto& v : counts[k])
        t += v;
    return t;
}

BruteCounts brute_counts(const LensParams& L, unsigned kmax)
{
    const unsigned n = L.n();
    if (n * std::log2(2.0 * kmax + 1.0) > std::log2(1e8))
        throw too_large("brute_counts: (2 kmax + 1)^n exceeds the 1e8 guard");

    BruteCounts B;
    B.kmax = kmax;
    B.n = n;
    B.counts.assign(kmax + 1, std::vector<Int>(n + 1, Int(0)));

    const unsigned q = L.q();
    std::vector<long> a(n, 0);
    // Depth-first over the one-norm ball.
    auto rec = [&](auto&& self, unsigned j, unsigned norm_used, unsigned zeros,
                   unsigned residue) -> void {
        if (j == n) {
            if (residue % q == 0)
                B.counts[norm_used][zeros] += 1;
            return;
        }
        const long budget = static_cast<long>(kmax - norm_used);
        for (long v = -budget; v <= budget; ++v) {
            long rs = (residue + v * static_cast<long>(L.s()[j])) %
                      static_cast<long>(q);
            if (rs < 0)
                rs += q;
            self(self, j + 1, norm_used + static_cast<unsigned>(v < 0 ? -v : v),
                 zeros + (v == 0 ? 1 : 0), static_cast<unsigned>(rs));
        }
    };
    rec(rec, 0, 0, 0, 0);
    return B;
}

RationalFunction theta_nminus1_orbifold(const LensParams& L)
{
    RationalFunction acc;
    for (unsigned v : L.s()) {
        unsigned m = L.q() / std::gcd(L.q(), v);
        // 2 z^m / (1 - z^m)
        acc += RationalFunction(IntPoly::monomial(Int(2), m),
                                IntPoly::one_minus_zq(m));
    }
    acc.reduce_by_cyclotomics(divisors_of(L.q()));
    return acc;
}

} // namespace lenspec
