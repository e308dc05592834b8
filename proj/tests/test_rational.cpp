#include <doctest.h>

#include "isospec/errors.hpp"
#include "isospec/rational.hpp"

using namespace isospec;

TEST_CASE("parse_rational reads integers and fractions") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("6/4") == Rational(3, 2));  // canonicalized
    CHECK(parse_rational("0/5") == 0);
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), InvalidArgumentError);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgumentError);
    CHECK_THROWS_AS(parse_rational("1/"), InvalidArgumentError);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgumentError);
    CHECK_THROWS_AS(parse_rational("1.5"), InvalidArgumentError);
}

TEST_CASE("format_rational is the inverse of parse_rational") {
    CHECK(format_rational(Rational(3, 4)) == "3/4");
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(Rational(5), /*always_fraction=*/true) == "5/1");
    CHECK(format_rational(Rational(0), /*always_fraction=*/true) == "0/1");
}

TEST_CASE("integer valuation counts prime powers") {
    CHECK(valuation(Integer(12), 2) == 2);
    CHECK(valuation(Integer(12), 3) == 1);
    CHECK(valuation(Integer(12), 5) == 0);
    CHECK(valuation(Integer(-8), 2) == 3);
    CHECK_THROWS_AS(valuation(Integer(0), 2), InvalidArgumentError);
}

TEST_CASE("rational valuation subtracts the denominator's") {
    CHECK(valuation(Rational(3, 8), 2) == -3);
    CHECK(valuation(Rational(4, 9), 2) == 2);
    CHECK(valuation(Rational(4, 9), 3) == -2);
    CHECK(valuation(Rational(7, 5), 3) == 0);
}
