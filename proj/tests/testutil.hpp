#pragma once

#include "lenspec/lens.hpp"
#include "lenspec/numeric.hpp"
#include "lenspec/series.hpp"

#include <random>
#include <vector>

namespace lenspec::testutil {

// Dimension of the degree-k harmonic polynomials on R^d: the standard
// fixture for sphere spectra.
inline Int harmonic_dim(long k, long d)
{
    if (k == 0)
        return Int(1);
    return binom(k + d - 1, d - 1) - binom(k + d - 3, d - 1);
}

// Independent isometry test straight from the definition: some unit t,
// signs and a permutation carry a onto b.  Exponential in n; for oracle
// use on small cases only.
inline bool isometric_by_definition(const LensParams& a, const LensParams& b)
{
    if (a.q() != b.q() || a.n() != b.n())
        return false;
    const unsigned q = a.q();
    const unsigned n = a.n();
    std::vector<unsigned> target = b.s();
    std::sort(target.begin(), target.end());
    for (unsigned t = 1; t <= (q == 1 ? 1u : q - 1); ++t) {
        if (std::gcd(t, q) != 1)
            continue;
        std::vector<unsigned> mapped(n);
        for (unsigned j = 0; j < n; ++j) {
            unsigned m = (static_cast<unsigned long>(t) * a.s()[j]) % q;
            mapped[j] = std::min(m, q - m);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target)
            return true;
    }
    return false;
}

inline std::mt19937& rng()
{
    static std::mt19937 gen(20240811u);
    return gen;
}

inline IntPoly random_poly(int max_deg, long coeff_range)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-coeff_range, coeff_range);
    std::vector<Int> c(deg(rng()) + 1);
    for (auto& v : c)
        v = coeff(rng());
    return IntPoly(std::move(c));
}

inline IntPoly random_nonzero_poly(int max_deg, long coeff_range)
{
    while (true) {
        IntPoly p = random_poly(max_deg, coeff_range);
        if (!p.is_zero())
            return p;
    }
}

} // namespace lenspec::testutil
