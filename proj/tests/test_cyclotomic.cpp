#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "eps/cyclotomic.hpp"
#include "eps/errors.hpp"

using eps::CyclotomicNumber;
using eps::Rational;
using eps::RootOfUnity;
using eps::RootSum;

namespace {

CyclotomicNumber zeta(std::int64_t order, std::int64_t exp, std::int64_t level)
{
    return CyclotomicNumber::embed(RootOfUnity::make(order, exp), level);
}

// Random element with small integer coordinates at the given level.
CyclotomicNumber random_value(std::mt19937& rng, std::int64_t level)
{
    std::uniform_int_distribution<std::int64_t> expd(0, level - 1);
    std::uniform_int_distribution<std::int64_t> coef(-4, 4);
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (int i = 0; i < 6; ++i)
        terms.push_back({expd(rng), Rational(coef(rng))});
    return CyclotomicNumber::from_terms(level, terms);
}

} // namespace

TEST_CASE("root of unity normal form")
{
    auto r = RootOfUnity::make(4, 2);
    CHECK(r.order() == 2);
    CHECK(r.exponent() == 1);

    r = RootOfUnity::make(5, 0);
    CHECK(r.order() == 1);
    CHECK(r.exponent() == 0);

    r = RootOfUnity::make(6, 4);
    CHECK(r.order() == 3);
    CHECK(r.exponent() == 2);

    CHECK_THROWS_AS(RootOfUnity::make(0, 1), std::invalid_argument);

    // negative exponents reduce into [0, order)
    CHECK(RootOfUnity::make(5, -1) == RootOfUnity::make(5, 4));
}

TEST_CASE("root of unity group operations")
{
    auto a = RootOfUnity::make(4, 1);
    auto b = RootOfUnity::make(6, 1);
    auto ab = a * b;
    CHECK(ab.order() == 12);
    CHECK(ab.exponent() == 5); // 3/12 + 2/12
    CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(2) == RootOfUnity::make(2, 1));
    CHECK(a.pow(-1) == a.inverse());
    CHECK(RootOfUnity::make(9, 2).pow(3) == RootOfUnity::make(3, 2));
}

TEST_CASE("embedding roots of unity")
{
    // zeta_3^2 = -1 - zeta_3 after reduction by x^2 + x + 1
    auto x = zeta(3, 2, 3);
    REQUIRE(x.coeffs().size() == 2);
    CHECK(x.coeffs()[0] == Rational(-1));
    CHECK(x.coeffs()[1] == Rational(-1));

    auto one = zeta(1, 0, 12);
    CHECK(one.is_rational());
    CHECK(one.as_rational() == Rational(1));

    // zeta_2 at level 4 is -1 in the phi(4) = 2 basis
    auto minus_one = zeta(2, 1, 4);
    CHECK(minus_one.coeffs()[0] == Rational(-1));
    CHECK(minus_one.coeffs()[1] == Rational(0));

    CHECK_THROWS_AS(CyclotomicNumber::embed(RootOfUnity::make(3, 1), 4),
                    eps::level_mismatch_error);
}

TEST_CASE("ring operations on explicit values")
{
    // sum of the nontrivial 5th roots of unity
    CyclotomicNumber s;
    for (int j = 1; j <= 4; ++j)
        s = s + zeta(5, j, 5);
    CHECK(s == CyclotomicNumber::from_integer(-1));

    auto x = zeta(7, 3, 7);
    CHECK(x * CyclotomicNumber::from_integer(1) == x);

    // (zeta_3 - zeta_3^2)^2 expands to zeta_3^2 - 2 + zeta_3 = -3
    auto d = zeta(3, 1, 3) - zeta(3, 2, 3);
    CHECK(d * d == CyclotomicNumber::from_integer(-3));
}

TEST_CASE("conjugation")
{
    CHECK(zeta(5, 1, 5).conjugate() == zeta(5, 4, 5));
    auto r = CyclotomicNumber::from_rational(Rational(7, 2));
    CHECK(r.conjugate() == r);

    // |zeta_3 - zeta_3^2|^2 = 3
    auto d = zeta(3, 1, 3) - zeta(3, 2, 3);
    CHECK(d.conjugate() * d == CyclotomicNumber::from_integer(3));
}

TEST_CASE("level lifting")
{
    auto x = zeta(3, 2, 3);
    CHECK(x.lift(3) == x);
    CHECK(x.lift(12) == zeta(3, 2, 12));
    CHECK(x.lift(12).lift(24) == x.lift(24));
    CHECK_THROWS_AS(x.lift(8), eps::level_mismatch_error);
    CHECK_THROWS_AS(x.lift(0), eps::level_mismatch_error);

    // equality is preserved across lifts
    auto a = zeta(5, 2, 5) + zeta(5, 3, 5);
    CHECK(a.lift(15) == a);
}

TEST_CASE("root of unity recognition")
{
    CHECK(CyclotomicNumber::from_integer(-1).as_root_of_unity() ==
          RootOfUnity::make(2, 1));
    CHECK(!CyclotomicNumber::from_integer(2).as_root_of_unity().has_value());
    CHECK(!CyclotomicNumber().as_root_of_unity().has_value());

    // -zeta_5^3 has order 10; certify by direct powering
    auto x = -zeta(5, 3, 5);
    auto r = x.as_root_of_unity();
    REQUIRE(r.has_value());
    CHECK(r->order() == 10);
    CyclotomicNumber p = CyclotomicNumber::from_integer(1);
    for (int k = 1; k < 10; ++k) {
        p = p * x;
        CHECK(p != CyclotomicNumber::from_integer(1));
    }
    CHECK(p * x == CyclotomicNumber::from_integer(1));
    CHECK(x == CyclotomicNumber::embed(*r, 10));

    // non-root with unit modulus pattern broken by an extra term
    auto y = zeta(5, 1, 5) + zeta(5, 2, 5);
    CHECK(!y.as_root_of_unity().has_value());

    // recognition survives lifting to a larger level
    auto lifted = (-zeta(6, 1, 6)).lift(12);
    auto r2 = lifted.as_root_of_unity();
    REQUIRE(r2.has_value());
    CHECK(r2->order() == 3); // -zeta_6 = zeta_3^2
    CHECK(r2->exponent() == 2);
}

TEST_CASE("complex approximation")
{
    auto [re1, im1] = zeta(4, 1, 4).approx_complex(15);
    CHECK(std::abs(re1) < 1e-12);
    CHECK(std::abs(im1 - 1.0) < 1e-12);

    auto d = zeta(3, 1, 3) - zeta(3, 2, 3);
    auto [re2, im2] = d.approx_complex(15);
    CHECK(std::abs(re2) < 1e-12);
    CHECK(std::abs(im2 - std::sqrt(3.0)) < 1e-12);

    auto [re3, im3] = CyclotomicNumber::from_integer(1).approx_complex(1);
    CHECK(re3 == doctest::Approx(1.0));
    CHECK(im3 == doctest::Approx(0.0));

    CHECK_THROWS_AS(d.approx_complex(0), std::invalid_argument);
}

TEST_CASE("ring laws on random triples")
{
    std::mt19937 rng(20260809);
    for (std::int64_t level : {12, 45, 100, 98}) {
        for (int it = 0; it < 20; ++it) {
            auto a = random_value(rng, level);
            auto b = random_value(rng, level);
            auto c = random_value(rng, level);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == CyclotomicNumber());
        }
    }
}

TEST_CASE("power and vanishing sum identities")
{
    for (std::int64_t n : {2, 3, 4, 6, 9, 12, 30}) {
        CyclotomicNumber p = CyclotomicNumber::from_integer(1);
        auto z = zeta(n, 1, n);
        for (std::int64_t k = 0; k < n; ++k)
            p = p * z;
        CHECK(p == CyclotomicNumber::from_integer(1));
    }
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        CyclotomicNumber s;
        for (std::int64_t j = 0; j < p; ++j)
            s = s + zeta(p, j, p);
        CHECK(s.is_zero());
    }
}

TEST_CASE("conjugation is a ring involution")
{
    std::mt19937 rng(7);
    for (int it = 0; it < 25; ++it) {
        auto a = random_value(rng, 60);
        auto b = random_value(rng, 60);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    }
}

TEST_CASE("lifting is injective and compatible with the ring structure")
{
    std::mt19937 rng(11);
    for (int it = 0; it < 25; ++it) {
        auto a = random_value(rng, 20);
        auto b = random_value(rng, 20);
        CHECK((a + b).lift(60) == a.lift(60) + b.lift(60));
        CHECK((a * b).lift(60) == a.lift(60) * b.lift(60));
        if (a != b)
            CHECK(a.lift(60) != b.lift(60));
    }
}

TEST_CASE("canonical form agrees with the numeric embedding")
{
    std::mt19937 rng(13);
    for (int it = 0; it < 40; ++it) {
        auto a = random_value(rng, 36);
        auto b = random_value(rng, 36);
        auto [ra, ia] = a.approx_complex(15);
        auto [rb, ib] = b.approx_complex(15);
        const bool close =
            std::abs(ra - rb) < 1e-9 && std::abs(ia - ib) < 1e-9;
        CHECK((a == b) == close);
    }
}

TEST_CASE("mixed level arithmetic lifts to the lcm")
{
    auto a = zeta(3, 1, 3);
    auto b = zeta(4, 1, 4);
    auto s = a * b;
    CHECK(s.level() == 12);
    CHECK(s == zeta(12, 7, 12)); // 4/12 + 3/12
}

TEST_CASE("root sums accumulate exactly")
{
    RootSum sum;
    for (int j = 0; j < 7; ++j)
        sum.add(RootOfUnity::make(7, j));
    CHECK(sum.term_count() == 7);
    CHECK(sum.level() == 7);
    CHECK(sum.value().is_zero());

    RootSum weighted;
    weighted.add(RootOfUnity::make(3, 1), Rational(1, 2));
    weighted.add(RootOfUnity::make(3, 1), Rational(1, 2));
    CHECK(weighted.value() == zeta(3, 1, 3));

    RootSum empty;
    CHECK(empty.value().is_zero());
    CHECK(empty.value().level() == 1);
}
