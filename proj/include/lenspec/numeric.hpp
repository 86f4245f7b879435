#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>

namespace lenspec {

// Arbitrary-precision integers and rationals.  Every polynomial and series
// coefficient in the library lives in these types; fixed-width integers are
// used only where a proven bound keeps them exact (see lattice.cpp).
using Int = mpz_class;
using Rat = mpq_class;

// binom(a, b) with the convention that it is 0 outside 0 <= b <= a.
inline Int binom(long a, long b)
{
    if (b < 0 || a < 0 || b > a)
        return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

inline Int pow_int(Int base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    return std::gcd(a, b);
}

inline bool is_prime_u(unsigned q)
{
    if (q < 2)
        return false;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

inline unsigned euler_phi(unsigned q)
{
    unsigned result = q;
    for (unsigned p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0)
                q /= p;
            result -= result / p;
        }
    }
    if (q > 1)
        result -= result / q;
    return result;
}

} // namespace lenspec
