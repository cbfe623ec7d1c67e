#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "lgriffiths/rational.hpp"

using lgriffiths::Rational;

TEST(Rational, CanonicalForm) {
    Rational q(6, -4);
    EXPECT_EQ(q.to_string(), "-3/2");
    EXPECT_EQ(q.numerator_string(), "-3");
    EXPECT_EQ(q.denominator_string(), "2");
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
    EXPECT_TRUE(Rational(10, 5).is_integer());
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
}

TEST(Rational, ParseRoundTrip) {
    for (const char* text : {"0", "42", "-3/7", "1/2", "123456789012345678901234567891/7"}) {
        EXPECT_EQ(Rational::parse(text).to_string(), text);
    }
    EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
    EXPECT_EQ(Rational::parse("+5").to_string(), "5");
    EXPECT_EQ(Rational::parse("3/-6"), Rational(-1, 2));
}

TEST(Rational, ParseRejectsMalformed) {
    for (const char* text : {"", "x", "1/", "/2", "1/0", "1.5", "1/2/3", " 1", "--1"}) {
        EXPECT_THROW(Rational::parse(text), std::invalid_argument) << text;
    }
}

TEST(Rational, Arithmetic) {
    const Rational a(1, 2);
    const Rational b(-2, 3);
    EXPECT_EQ(a + b, Rational(-1, 6));
    EXPECT_EQ(a - b, Rational(7, 6));
    EXPECT_EQ(a * b, Rational(-1, 3));
    EXPECT_EQ(a / b, Rational(-3, 4));
    EXPECT_EQ(-a, Rational(-1, 2));
    EXPECT_EQ(b.abs(), Rational(2, 3));
    EXPECT_EQ(b.reciprocal(), Rational(-3, 2));
    EXPECT_EQ(b.pow(3), Rational(-8, 27));
    EXPECT_EQ(b.pow(-2), Rational(9, 4));
    EXPECT_EQ(b.pow(0), Rational(1));
    EXPECT_THROW(a / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(0).reciprocal(), std::domain_error);
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(-5).sign(), -1);
    std::ostringstream os;
    os << Rational(-9, 12);
    EXPECT_EQ(os.str(), "-3/4");
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
    std::mt19937_64 rng(2024);
    auto draw = [&] {
        long num = static_cast<long>(rng() % 2001) - 1000;
        long den = static_cast<long>(rng() % 999) + 1;
        return Rational(num, den);
    };
    for (int n = 0; n < 300; ++n) {
        const Rational a = draw();
        const Rational b = draw();
        const Rational c = draw();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) EXPECT_EQ(a * a.reciprocal(), Rational(1));
    }
}
