#include <doctest.h>

#include "crn/rational.hpp"

using crn::Rational;

TEST_CASE("decimal strings parse exactly") {
    CHECK(crn::parse_rational("0.36") == Rational(9, 25));
    CHECK(crn::parse_rational("2.5") == Rational(5, 2));
    CHECK(crn::parse_rational("-0.125") == Rational(-1, 8));
    CHECK(crn::parse_rational("0.0") == 0);
}

TEST_CASE("integers and fractions") {
    CHECK(crn::parse_rational("42") == 42);
    CHECK(crn::parse_rational("-7") == -7);
    CHECK(crn::parse_rational("3/4") == Rational(3, 4));
    CHECK(crn::parse_rational("-6/8") == Rational(-3, 4));
    CHECK(crn::parse_rational("+2") == 2);
}

TEST_CASE("values are kept in lowest terms with positive denominator") {
    const Rational q = crn::parse_rational("36/100");
    CHECK(numerator(q) == 9);
    CHECK(denominator(q) == 25);
    const Rational n = Rational(3) / Rational(-6);
    CHECK(numerator(n) == -1);
    CHECK(denominator(n) == 2);
}

TEST_CASE("bad input is rejected") {
    CHECK_THROWS_AS(crn::parse_rational(""), crn::Error);
    CHECK_THROWS_AS(crn::parse_rational("1.2.3"), crn::Error);
    CHECK_THROWS_AS(crn::parse_rational("1/0"), crn::Error);
    CHECK_THROWS_AS(crn::parse_rational("abc"), crn::Error);
    CHECK_THROWS_AS(crn::parse_rational("1 2"), crn::Error);
}

TEST_CASE("to_string round-trips") {
    for (const char* text : {"3", "-4/7", "9/25", "0", "12"}) {
        const Rational q = crn::parse_rational(text);
        CHECK(crn::to_string(q) == text);
    }
}
