#include <doctest.h>

#include <stdexcept>

#include "eps/rational.hpp"

using eps::Rational;

TEST_CASE("rational normalization")
{
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic")
{
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(Rational(2).pow(10) == Rational(1024));
    CHECK(Rational(1, 2).pow(3) == Rational(1, 8));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering and predicates")
{
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(0).is_zero());
}

TEST_CASE("rational overflow is detected")
{
    Rational big(INT64_MAX);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("rational string round trip")
{
    CHECK(Rational(-3, 7).to_string() == "-3/7");
    CHECK(Rational(5).to_string() == "5/1");
    CHECK(Rational::parse("-3/7") == Rational(-3, 7));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse(Rational(22, 4).to_string()) == Rational(11, 2));
}
