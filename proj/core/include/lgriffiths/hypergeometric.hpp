#pragma once

/**
 * @file hypergeometric.hpp
 * @brief Terminating 2F1(-i, -x; -N; z) with non-positive integer parameters.
 *
 * The series stops at k = min(i, x). The lower Pochhammer (-N)_k vanishes
 * only for k > N, so the sum is well defined whenever min(i, x) <= N, which
 * is the only precondition checked.
 *
 * The kernel is a template so the exact path (Rational) and the floating
 * cross-check path (double) share one implementation.
 */

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lgriffiths/rational.hpp"

namespace lgriffiths {

template <typename T>
T hyp2f1_terminating_as(long i, long x, long N, const T& z) {
    if (i < 0 || x < 0 || N < 0) {
        throw std::domain_error("hyp2f1_terminating: negative parameter");
    }
    const long top = std::min(i, x);
    if (top > N) {
        throw std::domain_error("hyp2f1_terminating: min(i,x)=" + std::to_string(top) +
                                " exceeds N=" + std::to_string(N));
    }
    // term_{k+1} / term_k = (k - i)(k - x) / ((k - N)(k + 1)) * z
    T sum(1);
    T term(1);
    for (long k = 0; k < top; ++k) {
        term *= T((k - i) * (k - x));
        term /= T((k - N) * (k + 1));
        term *= z;
        sum += term;
    }
    return sum;
}

/// Exact sum_{k=0}^{min(i,x)} (-i)_k (-x)_k / ((-N)_k k!) z^k.
inline Rational hyp2f1_terminating(long i, long x, long N, const Rational& z) {
    return hyp2f1_terminating_as<Rational>(i, x, N, z);
}

}  // namespace lgriffiths
