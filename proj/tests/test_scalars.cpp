#include <doctest.h>

#include <random>
#include <stdexcept>

#include "quasikoorn/errors.hpp"
#include "quasikoorn/params.hpp"
#include "quasikoorn/rational.hpp"

using namespace quasikoorn;

namespace {

Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational canonical form")
{
    const Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(10, 5).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing")
{
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse(" -2 ") == Rational(-2));
    CHECK(Rational::parse("−5/6") == Rational(-5, 6));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("4/-6") == Rational(-2, 3));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 2"), std::invalid_argument);
    const Rational big = Rational::parse("123456789012345678901234567890/7");
    CHECK(Rational::parse(big.str()) == big);
}

TEST_CASE("rational arithmetic")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(-3, 7).inverse() == Rational(-7, 3));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(2024);
    for (int n = 0; n < 500; ++n) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Rational(1));
        }
        CHECK(std::hash<Rational>{}(a) == std::hash<Rational>{}(Rational::parse(a.str())));
    }
}

TEST_CASE("floor examples")
{
    CHECK(rational_floor(Rational(3, 2)) == 1);
    CHECK(rational_floor(Rational(-1, 4)) == -1);
    CHECK(rational_floor(Rational(2)) == 2);
    CHECK(floor_even(Rational(3, 2)) == 0);
    CHECK(floor_odd(Rational(3, 2)) == 1);
    CHECK(floor_even(Rational(2)) == 2);
    CHECK(floor_odd(Rational(2)) == 1);
    CHECK(floor_even(Rational(-3, 2)) == -2);
    CHECK(floor_odd(Rational(-3, 2)) == -3);
}

TEST_CASE("floor properties")
{
    std::mt19937_64 rng(77);
    for (int n = 0; n < 1000; ++n) {
        const Rational x = random_rational(rng);
        const std::int64_t f = rational_floor(x);
        const std::int64_t e = floor_even(x);
        const std::int64_t o = floor_odd(x);
        CHECK(Rational(static_cast<long>(f)) <= x);
        CHECK(x < Rational(static_cast<long>(f + 1)));
        CHECK(e % 2 == 0);
        CHECK((o % 2 == 1 || o % 2 == -1));
        CHECK(Rational(static_cast<long>(e)) <= x);
        CHECK(x < Rational(static_cast<long>(e + 2)));
        CHECK(Rational(static_cast<long>(o)) <= x);
        CHECK(x < Rational(static_cast<long>(o + 2)));
        const bool pair = (e == f && o == f - 1) || (o == f && e == f - 1);
        CHECK(pair);
    }
}

TEST_CASE("parity indicators")
{
    CHECK(is_even_integer(Rational(4)));
    CHECK(is_even_integer(Rational(0)));
    CHECK(is_even_integer(Rational(-2)));
    CHECK_FALSE(is_even_integer(Rational(3)));
    CHECK_FALSE(is_even_integer(Rational(1, 2)));
    CHECK(is_odd_integer(Rational(-3)));
    CHECK_FALSE(is_odd_integer(Rational(3, 2)));
}

TEST_CASE("q_power")
{
    ParamSpec p;
    p.sqrt_q = Rational(2);
    CHECK(q_power(p, 2) == Rational(4));
    CHECK(q_power(p, 0) == Rational(1));
    p.sqrt_q = Rational(3);
    CHECK(q_power(p, -1) == Rational(1, 3));
}

TEST_CASE("parameter validation")
{
    ParamSpec p;
    CHECK_NOTHROW(p.validate());
    p.rank = 0;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p.rank = 2;
    p.ur = Rational(0);
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
}

TEST_CASE("torus points")
{
    const TorusPoint t{{Rational(2), Rational(-1, 3)}};
    CHECK(torus_eval(t, {2, -1}) == Rational(-12));
    CHECK(torus_eval(t, {0, 0}) == Rational(1));
    CHECK((t * TorusPoint::unit(2)) == t);
    CHECK_THROWS_AS(torus_eval(t, {1}), DimensionMismatch);
}
