#include <doctest.h>

#include "spq/rational.hpp"

using namespace spq;

TEST_CASE("rationals reduce and normalize sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(4, 4).str() == "1/1");
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 4) < Rational(1, 2));
    CHECK(Rational(1, 2) <= Rational(2, 4));
    CHECK(Rational(3, 4) > Rational(1, 2));
    CHECK(Rational(1, 2) != Rational(1, 3));
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parsing bounds") {
    CHECK(*parse_rational("1/2") == Rational(1, 2));
    CHECK(*parse_rational("3") == Rational(3, 1));
    CHECK(*parse_rational("0.25") == Rational(1, 4));
    CHECK(*parse_rational("0") == Rational(0, 1));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("").has_value());
    CHECK(!parse_rational("woof").has_value());
}
