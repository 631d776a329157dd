#include "cfq/integer.hpp"

#include "cfq/error.hpp"

#include <doctest.h>

#include <random>

using cfq::Integer;

TEST_CASE("floor_div rounds toward minus infinity") {
    CHECK(cfq::floor_div(7, 2) == 3);
    CHECK(cfq::floor_div(-7, 2) == -4);
    CHECK(cfq::floor_div(7, -2) == -4);
    CHECK(cfq::floor_div(-7, -2) == 3);
    CHECK(cfq::floor_div(6, 3) == 2);
    CHECK(cfq::floor_div(-6, 3) == -2);
    CHECK(cfq::floor_div(0, 5) == 0);
    CHECK_THROWS_AS(cfq::floor_div(1, 0), cfq::error);
}

TEST_CASE("isqrt on pinned values") {
    CHECK(cfq::isqrt(0) == 0);
    CHECK(cfq::isqrt(1) == 1);
    CHECK(cfq::isqrt(2) == 1);
    CHECK(cfq::isqrt(3) == 1);
    CHECK(cfq::isqrt(4) == 2);
    CHECK(cfq::isqrt(1726) == 41);

    const Integer big = boost::multiprecision::pow(Integer(10), 200);
    CHECK(cfq::isqrt(big) == boost::multiprecision::pow(Integer(10), 100));
    CHECK(cfq::isqrt(big - 1) == boost::multiprecision::pow(Integer(10), 100) - 1);

    CHECK_THROWS_AS(cfq::isqrt(-1), cfq::error);
}

TEST_CASE("isqrt certificate holds and matches the library route") {
    std::mt19937_64 rng(20240917);
    for (int i = 0; i < 2000; ++i) {
        Integer m = rng();
        m = (m << 64) | rng();
        if (i % 3 == 0) m >>= (i % 60); // mix in small values
        const Integer t = cfq::isqrt(m);
        CHECK(t * t <= m);
        CHECK((t + 1) * (t + 1) > m);
        CHECK(t == boost::multiprecision::sqrt(m));
    }
}

TEST_CASE("is_square") {
    CHECK(cfq::is_square(0));
    CHECK(cfq::is_square(1));
    CHECK(cfq::is_square(4));
    CHECK(cfq::is_square(1681));
    CHECK_FALSE(cfq::is_square(2));
    CHECK_FALSE(cfq::is_square(3));
    CHECK_FALSE(cfq::is_square(1726));
    CHECK_FALSE(cfq::is_square(-4));
}

TEST_CASE("decimal parsing") {
    CHECK(cfq::parse_integer("123") == 123);
    CHECK(cfq::parse_integer("-5") == -5);
    CHECK(cfq::parse_integer("+7") == 7);
    CHECK(cfq::parse_integer("007") == 7);
    CHECK(cfq::parse_integer("-0") == 0);
    CHECK(cfq::to_decimal(cfq::parse_integer("98765432109876543210987654321")) ==
          "98765432109876543210987654321");

    CHECK_THROWS_AS(cfq::parse_integer(""), cfq::error);
    CHECK_THROWS_AS(cfq::parse_integer("-"), cfq::error);
    CHECK_THROWS_AS(cfq::parse_integer("twelve"), cfq::error);
    CHECK_THROWS_AS(cfq::parse_integer("1.5"), cfq::error);
    CHECK_THROWS_AS(cfq::parse_integer("12 "), cfq::error);
}
