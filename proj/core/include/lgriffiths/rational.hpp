#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational scalar.
 *
 * Thin value type over GMP's mpq_class. Every operation leaves the value in
 * canonical form (positive denominator, coprime numerator), so equality is
 * structural and bit-exact. Text form is "num/den", with the denominator
 * omitted when it is 1.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lgriffiths {

class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);
    explicit Rational(const mpz_class& value) : Rational(mpq_class(value)) {}

    /// Parses "num/den" or "num". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string numerator_string() const;
    [[nodiscard]] std::string denominator_string() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational reciprocal() const;
    /// Integer power; negative exponents require a nonzero base.
    [[nodiscard]] Rational pow(long exponent) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value);

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

    [[nodiscard]] const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

}  // namespace lgriffiths
