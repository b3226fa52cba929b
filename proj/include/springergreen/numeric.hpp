#pragma once

#include <gmpxx.h>

#include <string>

namespace sg {

// Arbitrary-precision integers and rationals.  Every combinatorial quantity
// in the library is an Int; Rat appears only in class-function arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int pow2(int n) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), n);
    return r;
}

// Exact conversion Rat -> Int; throws if the value is not integral.
Int to_int(const Rat& q);

inline std::string to_dec(const Int& v) { return v.get_str(10); }

} // namespace sg
