#include "doctest.h"

#include <stdexcept>

#include "hcrev/rational.hpp"

using hcrev::int128;
using hcrev::Rational;

TEST_CASE("fractions normalize to lowest terms with positive denominator") {
    CHECK(Rational::fraction(2, 4) == Rational::fraction(1, 2));
    CHECK(Rational::fraction(-3, 6) == Rational::fraction(1, -2));
    CHECK(Rational::fraction(0, 7) == Rational(0));
    CHECK(Rational::fraction(5, -1) == Rational(-5));
    CHECK(Rational::fraction(4, 2).is_integer());
    CHECK(Rational::fraction(7, 2).den() == 2);
    CHECK_THROWS_AS(Rational::fraction(1, 0), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
    Rational third = Rational::fraction(1, 3);
    Rational sixth = Rational::fraction(1, 6);
    CHECK(third + sixth == Rational::fraction(1, 2));
    CHECK(third - sixth == sixth);
    CHECK(Rational::fraction(2, 3) * Rational::fraction(3, 4) == Rational::fraction(1, 2));
    CHECK(Rational::fraction(1, 2) / Rational::fraction(1, 8) == Rational(4));
    CHECK(-Rational::fraction(1, 2) + Rational::fraction(1, 2) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    Rational acc = 0;
    for (int i = 0; i < 100; ++i) acc += Rational::fraction(1, 100);
    CHECK(acc == Rational(1));
}

TEST_CASE("ordering is exact under cross multiplication") {
    CHECK(Rational::fraction(1, 3) < Rational::fraction(1, 2));
    CHECK(Rational::fraction(-1, 2) < Rational::fraction(-1, 3));
    CHECK(Rational::fraction(2, 3) > Rational::fraction(3, 5));
    CHECK(Rational::fraction(10, 20) <= Rational::fraction(1, 2));
    CHECK(Rational::fraction(10, 20) >= Rational::fraction(1, 2));
    CHECK(Rational::fraction(585, 1000) < Rational::fraction(2, 3));
    CHECK(Rational(3).sign() == 1);
    CHECK(Rational(-3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("overflow is detected, never wrapped") {
    Rational huge = Rational::fraction(((int128)1) << 120, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
    Rational big = Rational::fraction(((int128)1) << 126, 1);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("decimal parsing accepts plain and fractional literals") {
    CHECK(Rational::parse_decimal("3") == Rational(3));
    CHECK(Rational::parse_decimal("0.25") == Rational::fraction(1, 4));
    CHECK(Rational::parse_decimal("-1.5") == Rational::fraction(-3, 2));
    CHECK(Rational::parse_decimal("+2.50") == Rational::fraction(5, 2));
    CHECK(Rational::parse_decimal("0.000000001") == Rational::fraction(1, 1000000000));
    CHECK(Rational::parse_decimal("10") == Rational(10));
}

TEST_CASE("decimal parsing rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal("1e-3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal("1."), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal(".5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal("1.5x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal("0.0000000001"), std::invalid_argument);
    CHECK(Rational::parse_decimal("0.0001", 4) == Rational::fraction(1, 10000));
    CHECK_THROWS_AS(Rational::parse_decimal("0.0001", 3), std::invalid_argument);
}

TEST_CASE("to_string renders exact decimals for 2^a 5^b denominators") {
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational::fraction(1, 2).to_string() == "0.5");
    CHECK(Rational::fraction(-1, 4).to_string() == "-0.25");
    CHECK(Rational::fraction(3, 8).to_string() == "0.375");
    CHECK(Rational::fraction(1, 5).to_string() == "0.2");
    CHECK(Rational::fraction(25, 10).to_string() == "2.5");
    CHECK(Rational::fraction(1, 3).to_string() == "1/3");
    CHECK(Rational::fraction(-5, 6).to_string() == "-5/6");
    CHECK(Rational(0).to_string() == "0");
}

TEST_CASE("parse and to_string round-trip") {
    for (const char* s : {"0", "1", "-1", "0.5", "123.456", "-0.000000001", "42", "7.25"}) {
        CHECK(Rational::parse_decimal(Rational::parse_decimal(s).to_string()) ==
              Rational::parse_decimal(s));
        CHECK(Rational::parse_decimal(s).to_string() == s);
    }
}

TEST_CASE("to_fixed rounds half away from zero") {
    CHECK(Rational::fraction(2, 3).to_fixed(6) == "0.666667");
    CHECK(Rational::fraction(1, 3).to_fixed(6) == "0.333333");
    CHECK(Rational(1).to_fixed(6) == "1.000000");
    CHECK(Rational::fraction(1, 2).to_fixed(0) == "1");
    CHECK(Rational::fraction(-1, 2).to_fixed(0) == "-1");
    CHECK(Rational::fraction(585, 1000).to_fixed(3) == "0.585");
    CHECK(Rational::fraction(1, 16).to_fixed(2) == "0.06");
    CHECK(Rational::fraction(3, 16).to_fixed(2) == "0.19");
}

TEST_CASE("to_double is the usual quotient") {
    CHECK(Rational::fraction(1, 2).to_double() == 0.5);
    CHECK(Rational::fraction(-3, 4).to_double() == -0.75);
    CHECK(Rational(0).to_double() == 0.0);
}
