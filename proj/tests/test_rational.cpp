#include "doctest.h"

#include "chordal/rational.hpp"
#include "chordal/rng.hpp"

using chordal::rational;

TEST_CASE("construction and canonical form") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, 4) == rational(-1, 2));
    CHECK(rational(2, -4) == rational(-1, 2));
    CHECK(rational(0, 5) == rational(0));
    CHECK_THROWS_AS(rational(1, 0), std::invalid_argument);
    CHECK(rational(7).str() == "7");
    CHECK(rational(7, 2).str() == "7/2");
    CHECK(rational(-7, 2).str() == "-7/2");
}

TEST_CASE("arithmetic") {
    CHECK(rational(1, 2) + rational(1, 3) == rational(5, 6));
    CHECK(rational(1, 2) - rational(1, 3) == rational(1, 6));
    CHECK(rational(2, 3) * rational(3, 4) == rational(1, 2));
    CHECK(rational(1, 2) / rational(1, 4) == rational(2));
    CHECK(-rational(1, 2) == rational(-1, 2));
    CHECK_THROWS_AS(rational(1) / rational(0), std::invalid_argument);
}

TEST_CASE("ordering") {
    CHECK(rational(1, 3) < rational(1, 2));
    CHECK(rational(-1) < rational(0));
    CHECK(rational(7, 3) > rational(2));
    CHECK(rational(4, 2) <= rational(2));
    CHECK(rational(4, 2) >= rational(2));
}

TEST_CASE("parsing") {
    CHECK(*rational::parse("3/4") == rational(3, 4));
    CHECK(*rational::parse("-3/4") == rational(-3, 4));
    CHECK(*rational::parse("3/-4") == rational(-3, 4));
    CHECK(*rational::parse("6/4") == rational(3, 2));
    CHECK(*rational::parse("42") == rational(42));
    CHECK(*rational::parse("1.25") == rational(5, 4));
    CHECK(*rational::parse("-0.5") == rational(-1, 2));
    CHECK(*rational::parse(".5") == rational(1, 2));
    CHECK(*rational::parse("2.50") == rational(5, 2));

    CHECK_FALSE(rational::parse("").has_value());
    CHECK_FALSE(rational::parse("1/0").has_value());
    CHECK_FALSE(rational::parse("1.").has_value());
    CHECK_FALSE(rational::parse("a").has_value());
    CHECK_FALSE(rational::parse("1.2.3").has_value());
    CHECK_FALSE(rational::parse("1/2/3").has_value());
    CHECK_FALSE(rational::parse("1.5/2").has_value());
    CHECK_FALSE(rational::parse(" 1").has_value());
}

TEST_CASE("string round trip on random values") {
    chordal::splitmix64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        long num = static_cast<long>(rng.below(2000)) - 1000;
        long den = 1 + static_cast<long>(rng.below(999));
        rational x(num, den);
        auto back = rational::parse(x.str());
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
}

TEST_CASE("big values stay exact") {
    rational big(1);
    for (int i = 0; i < 40; ++i) big *= rational(1000000007, 3);
    rational small(1);
    for (int i = 0; i < 40; ++i) small *= rational(3, 1000000007);
    CHECK(big * small == rational(1));
    CHECK_FALSE(big.fits_long());
}
