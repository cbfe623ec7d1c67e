#pragma once

#include "lgriffiths/rational.hpp"

namespace lgriffiths {

/// C(n,k) for n >= 0, zero-extended to 0 when k < 0 or k > n.
/// Throws std::domain_error for n < 0.
Rational binomial(long n, long k);

/// n! for n >= 0. Throws std::domain_error for n < 0.
Rational factorial(long n);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), computed as a literal product.
template <typename T>
T pochhammer(const T& a, long k) {
    T out(1);
    for (long t = 0; t < k; ++t) out *= a + T(t);
    return out;
}

}  // namespace lgriffiths
