#include <catch2/catch_amalgamated.hpp>

#include "plattice/rational.hpp"

using namespace plat;

TEST_CASE("rational rendering is canonical") {
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("-5/10") == Rational(-1, 2));
    for (const char* text : {"0", "10", "1/3", "22/7"})
        CHECK(to_string(parse_rational(text)) == text);
}

TEST_CASE("malformed rationals are rejected") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("decimal rendering rounds") {
    CHECK(to_decimal_string(Rational(1, 2), 2) == "0.50");
    CHECK(to_decimal_string(Rational(1, 3), 3) == "0.333");
    CHECK(to_decimal_string(Rational(2, 3), 2) == "0.67");
    CHECK(to_decimal_string(Rational(5), 0) == "5");
}

TEST_CASE("floor of rationals") {
    CHECK(floor_rational(Rational(7, 2)) == 3);
    CHECK(floor_rational(Rational(4)) == 4);
    CHECK(floor_rational(Rational(-1, 2)) == -1);
}
