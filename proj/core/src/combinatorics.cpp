#include "lgriffiths/combinatorics.hpp"

#include <stdexcept>

namespace lgriffiths {

Rational binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n is outside the supported domain");
    if (k < 0 || k > n) return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out);
}

Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(out);
}

}  // namespace lgriffiths
