#include "maxpres/rational.hpp"

#include <doctest.h>

using namespace maxpres;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("+2/1") == 2);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational("1.5"), FormatError);
    CHECK_THROWS_AS(parse_rational("3/-4"), FormatError);
    CHECK_THROWS_AS(parse_rational(""), FormatError);
}

TEST_CASE("exact roots and rational powers") {
    CHECK(exact_root(Rational(9, 4), 2) == Rational(3, 2));
    CHECK_FALSE(exact_root(Rational(2), 2).has_value());
    CHECK(rational_power(Rational(8), Rational(2, 3)) == Rational(4));
    CHECK(rational_power(Rational(1, 4), Rational(1, 2)) == Rational(1, 2));
    CHECK_FALSE(rational_power(Rational(3), Rational(1, 2)).has_value());
    CHECK(power_of_two(-3) == Rational(1, 8));
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
    CHECK(to_decimal(Rational(5), 0) == "5");
}
