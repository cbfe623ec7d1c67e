#include "lgriffiths/rational_sqrt.hpp"

namespace lgriffiths {

namespace {

bool exact_integer_sqrt(const mpz_class& n, mpz_class& root) {
    if (n < 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root * root == n;
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    // Canonical form: q = a/b with gcd(a,b) = 1, so q is a rational square
    // iff both a and b are integer squares.
    mpz_class num_root;
    mpz_class den_root;
    if (!exact_integer_sqrt(q.raw().get_num(), num_root)) return std::nullopt;
    if (!exact_integer_sqrt(q.raw().get_den(), den_root)) return std::nullopt;
    return Rational(mpq_class(num_root, den_root));
}

}  // namespace lgriffiths
