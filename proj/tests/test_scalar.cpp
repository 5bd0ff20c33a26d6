#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latwce/scalar.hpp"

using namespace latwce;

TEST_CASE("make_rational canonicalizes sign and common factors") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(make_rational(-3, -6) == make_rational(1, 2));
    CHECK(make_rational(0, 7) == make_rational(0));
    CHECK(make_rational(5) == make_rational(5, 1));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("rational_from_string parses integers, fractions and decimals exactly") {
    CHECK(rational_from_string("7") == make_rational(7));
    CHECK(rational_from_string("-3") == make_rational(-3));
    CHECK(rational_from_string("3/9") == make_rational(1, 3));
    CHECK(rational_from_string("-4/6") == make_rational(-2, 3));
    CHECK(rational_from_string("0.125") == make_rational(1, 8));
    CHECK(rational_from_string("0.1") == make_rational(1, 10)); // exact decimal, not the double 0.1
    CHECK(rational_from_string("-0.25") == make_rational(-1, 4));
    CHECK(rational_from_string("1e-2") == make_rational(1, 100));
    CHECK(rational_from_string("2.5e1") == make_rational(25));
    CHECK(rational_from_string("2.5E-1") == make_rational(1, 4));
    CHECK_THROWS_AS(rational_from_string(""), std::domain_error);
    CHECK_THROWS_AS(rational_from_string("abc"), std::domain_error);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(rational_from_string("1.2.3"), std::domain_error);
}

TEST_CASE("rational_from_double reproduces the binary value bit for bit") {
    CHECK(rational_from_double(0.5) == make_rational(1, 2));
    CHECK(rational_from_double(0.75) == make_rational(3, 4));
    CHECK(rational_from_double(-2.0) == make_rational(-2));
    // 0.1 as a double is NOT 1/10; its exact binary expansion is below.
    Rational point_one = rational_from_double(0.1);
    CHECK(point_one != make_rational(1, 10));
    CHECK(to_double(point_one) == 0.1);
}

TEST_CASE("to_string renders p/q with the denominator suppressed when 1") {
    CHECK(to_string(make_rational(1, 2)) == "1/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(to_string(make_rational(-1, 3)) == "-1/3");
    CHECK(to_string(make_rational(0)) == "0");
}

TEST_CASE("format_double is shortest round-trip and locale independent") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(1e300) == "1e+300");
    double v = 0.1 + 0.2;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("Scalar carries its mode and arithmetic stays within it") {
    Scalar f = Scalar::floating(0.5);
    Scalar e = Scalar::exact(1, 2);
    CHECK(f.mode() == Mode::Float);
    CHECK(e.mode() == Mode::Exact);
    CHECK(e.is_exact());
    CHECK(!f.is_exact());

    CHECK((e + e).rational() == make_rational(1));
    CHECK((e * e).rational() == make_rational(1, 4));
    CHECK((e - Scalar::exact(1, 3)).rational() == make_rational(1, 6));
    CHECK((Scalar::exact(1) / Scalar::exact(3)).rational() == make_rational(1, 3));
    CHECK((f + f).as_double() == 1.0);
    CHECK((-e).rational() == make_rational(-1, 2));
}

TEST_CASE("Scalar refuses to mix FLOAT and EXACT operands") {
    Scalar f = Scalar::floating(0.5);
    Scalar e = Scalar::exact(1, 2);
    CHECK_THROWS_AS(f + e, mode_error);
    CHECK_THROWS_AS(e - f, mode_error);
    CHECK_THROWS_AS(f * e, mode_error);
    CHECK_THROWS_AS(e / f, mode_error);
    CHECK_THROWS_AS((void)(e < f), mode_error);
    CHECK_THROWS_AS(f.rational(), mode_error);
}

TEST_CASE("Scalar comparison and zero detection") {
    CHECK(Scalar::exact(1, 3) < Scalar::exact(1, 2));
    CHECK(Scalar::exact(2, 4) == Scalar::exact(1, 2));
    CHECK(Scalar::floating(1.0) > Scalar::floating(0.5));
    CHECK(Scalar::exact(0).is_zero());
    CHECK(Scalar::floating(0.0).is_zero());
    CHECK(!Scalar::exact(1, 1000000).is_zero());
}

TEST_CASE("Scalar division by zero is rejected in both modes") {
    CHECK_THROWS_AS(Scalar::exact(1) / Scalar::exact(0), std::domain_error);
    CHECK_THROWS_AS(Scalar::floating(1.0) / Scalar::floating(0.0), std::domain_error);
}

TEST_CASE("Scalar::of converts a double into the requested mode") {
    CHECK(Scalar::of(Mode::Float, 0.5).mode() == Mode::Float);
    CHECK(Scalar::of(Mode::Exact, 0.5).rational() == make_rational(1, 2));
}

TEST_CASE("Scalar::str matches the per-mode formatting") {
    CHECK(Scalar::exact(1, 3).str() == "1/3");
    CHECK(Scalar::floating(0.25).str() == "0.25");
}

TEST_CASE("exact conversion to double is the designated exit from EXACT mode") {
    CHECK(Scalar::exact(1, 2).as_double() == 0.5);
    CHECK(Scalar::exact(1, 3).as_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}
