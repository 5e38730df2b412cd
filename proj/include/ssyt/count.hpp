#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ssyt {

/// Arbitrary-precision nonnegative integer; every tableau count in the library is exact.
using Count = mpz_class;

inline Count factorial(unsigned long n) {
    Count r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Exact integer division. A remainder means an internal arithmetic bug,
/// never a recoverable condition, so it aborts via logic_error.
inline Count exact_div(const Count& num, const Count& den) {
    if (den == 0 || mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
        throw std::logic_error("exact_div: " + num.get_str() + " not divisible by " +
                               den.get_str());
    }
    Count q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Count pow_int(long base, unsigned long exp) {
    Count r, b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

} // namespace ssyt
