#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/rational.hpp"

using riesz::Rational;

TEST_CASE("construction reduces and normalizes sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2).denominator() == 2);
    CHECK(Rational(-3, 6).numerator() == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(7, 2) / Rational(7, 4) == Rational(2));
    CHECK(-Rational(5, 3) == Rational(-5, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(riesz::max(Rational(1, 3), Rational(2, 5)) == Rational(2, 5));
    CHECK(riesz::min(Rational(-1), Rational(1)) == Rational(-1));
}

TEST_CASE("parse and print round trip") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-3/4").str() == "-3/4");
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational::parse("-5").str() == "-5");
    CHECK(Rational::parse("0").str() == "0");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("abs and sign") {
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(3, 7).sign() == 1);
}
