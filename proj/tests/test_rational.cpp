// SPDX-License-Identifier: Apache-2.0
#include <combwalks/rational.hpp>

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using combwalks::Rational;

namespace {

// Small random rational with nonzero denominator; num may be negative.
Rational draw(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = 1 + static_cast<long>(rng() % 999);
    return Rational(num, den);
}

}  // namespace

TEST_CASE("rational construction canonicalizes") {
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(6, -8).str() == "-3/4");   // sign moves to numerator
    CHECK(Rational(-6, -8).str() == "3/4");
    CHECK(Rational(0, 17).str() == "0");
    CHECK(Rational(5, 1).str() == "5");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational().is_zero());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse round-trips canonical strings") {
    const char* cases[] = {"0", "1", "-1", "3/4", "-3/4", "123456789123456788/7", "1/982451653"};
    for (const char* s : cases) CHECK(Rational::parse(s).str() == s);

    CHECK(Rational::parse("6/8") == Rational(3, 4));   // non-canonical input accepted
    CHECK(Rational::parse("3/-4") == Rational(-3, 4));
    CHECK(Rational::parse("-0") == Rational(0));

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("+5"), std::invalid_argument);  // sign prefix only as '-'
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), std::invalid_argument);
}

TEST_CASE("rational arithmetic identities hold on random inputs") {
    std::mt19937_64 rng(0xC0FFEEu);
    for (int i = 0; i < 200; ++i) {
        Rational a = draw(rng), b = draw(rng), c = draw(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rational inverse, abs, pow") {
    CHECK(Rational(-3, 4).inverse() == Rational(-4, 3));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(3, 4).abs() == Rational(3, 4));

    CHECK(Rational(-2, 3).pow(0) == Rational(1));
    CHECK(Rational(-2, 3).pow(1) == Rational(-2, 3));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(0).pow(0) == Rational(1));  // empty product convention

    // Exponent laws on a modest range.
    Rational base(5, 7);
    for (unsigned long e = 0; e <= 6; ++e)
        CHECK(base.pow(e) * base == base.pow(e + 1));
}

TEST_CASE("rational division by zero throws") {
    Rational a(1, 2);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering is total and consistent with sign") {
    CHECK(Rational(-1, 3) < Rational(1, 4));
    CHECK(Rational(1, 3) > Rational(1, 4));
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 9).sign() == 1);
}

TEST_CASE("rational log2_abs tracks magnitude beyond double range") {
    CHECK(std::isinf(Rational(0).log2_abs()));
    CHECK(Rational(0).log2_abs() < 0);
    CHECK(Rational(8).log2_abs() == doctest::Approx(3.0));
    CHECK(Rational(-1, 1024).log2_abs() == doctest::Approx(-10.0));

    // 2^(±4096) overflows double but log2_abs stays finite and exact-ish.
    Rational huge = Rational(2).pow(4096);
    Rational tiny = huge.inverse();
    CHECK(huge.log2_abs() == doctest::Approx(4096.0));
    CHECK(tiny.log2_abs() == doctest::Approx(-4096.0));
    CHECK(std::isinf(huge.to_double()));  // double conversion saturates, log2_abs does not
}

TEST_CASE("rational to_double matches small fractions") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-3, 8).to_double() == -0.375);
}
