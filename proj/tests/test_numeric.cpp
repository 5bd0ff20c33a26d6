#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latwce/numeric.hpp"

#include <random>

using namespace latwce;

TEST_CASE("b1 and b2 reproduce hand-computed rational values") {
    CHECK(b2<Rational>(make_rational(0)) == make_rational(1, 6));
    CHECK(b2<Rational>(make_rational(1)) == make_rational(1, 6));
    CHECK(b2<Rational>(make_rational(1, 2)) == make_rational(-1, 12));
    CHECK(b2<Rational>(make_rational(1, 3)) == make_rational(-1, 18));
    CHECK(b1<Rational>(make_rational(0)) == make_rational(-1, 2));
    CHECK(b1<Rational>(make_rational(1)) == make_rational(1, 2));
    CHECK(b1<Rational>(make_rational(1, 2)) == make_rational(0));
    CHECK(b1<double>(0.25) == -0.25);
    CHECK(b2<double>(0.5) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("b2 is symmetric about 1/2") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        long long den = 1 + static_cast<long long>(rng() % 1000);
        long long num = static_cast<long long>(rng() % static_cast<unsigned long long>(den + 1));
        Rational x = make_rational(num, den);
        CHECK(b2<Rational>(x) == b2<Rational>(Rational(1 - x)));
    }
}

TEST_CASE("b1 and b2 reject arguments outside the unit interval") {
    CHECK_THROWS_AS(b1<double>(-0.1), std::domain_error);
    CHECK_THROWS_AS(b1<double>(1.1), std::domain_error);
    CHECK_THROWS_AS(b2<Rational>(make_rational(3, 2)), std::domain_error);
    CHECK_THROWS_AS(b2<Rational>(make_rational(-1, 2)), std::domain_error);
}

TEST_CASE("Scalar-level b1/b2 dispatch on mode") {
    CHECK(b2(Scalar::exact(1, 2)).rational() == make_rational(-1, 12));
    CHECK(b1(Scalar::floating(0.25)).as_double() == -0.25);
}

TEST_CASE("signed residues land in the symmetric range and match direct computation") {
    // n = 7: residues of 0..7 are 0,1,2,3,-3,-2,-1,0.
    long long expected7[] = {0, 1, 2, 3, -3, -2, -1, 0};
    for (long long j = 0; j <= 7; ++j) {
        auto r = signed_residue(j, 7);
        CHECK(r.value == expected7[j]);
        CHECK(r.modulus == 7);
    }
    CHECK(signed_residue(10, 7).value == 3);
    CHECK(signed_residue(11, 7).value == -3);
    CHECK(signed_residue_value(123456789, 101) == signed_residue(123456789, 101).value);

    for (long long n : {3LL, 5LL, 11LL, 101LL})
        for (long long j = 0; j < 3 * n; ++j) {
            long long v = signed_residue_value(j, n);
            CHECK(v >= -(n - 1) / 2);
            CHECK(v <= (n - 1) / 2);
            long long diff = ((j - v) % n + n) % n;
            CHECK(diff == 0);
        }
}

TEST_CASE("signed residue validates its inputs") {
    CHECK_THROWS_AS(signed_residue(1, 4), std::domain_error);
    CHECK_THROWS_AS(signed_residue(1, 1), std::domain_error);
    CHECK_THROWS_AS(signed_residue(-1, 7), std::domain_error);
}

TEST_CASE("harmonic numbers, exact and floating") {
    CHECK(harmonic_exact(1) == make_rational(1));
    CHECK(harmonic_exact(2) == make_rational(3, 2));
    CHECK(harmonic_exact(5) == make_rational(137, 60));
    CHECK(harmonic_exact(10) == make_rational(7381, 2520));
    CHECK(harmonic_double(10) == doctest::Approx(7381.0 / 2520.0).epsilon(1e-15));
    CHECK(harmonic(5, Mode::Exact).rational() == make_rational(137, 60));
    CHECK(harmonic(5, Mode::Float).mode() == Mode::Float);
    CHECK_THROWS_AS(harmonic_exact(0), std::domain_error);
}

TEST_CASE("deterministic primality testing") {
    CHECK(!is_prime_u64(0));
    CHECK(!is_prime_u64(1));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(!is_prime_u64(9));
    CHECK(!is_prime_u64(561));  // Carmichael number
    CHECK(!is_prime_u64(1105)); // Carmichael number
    CHECK(is_prime_u64(2305843009213693951ull)); // 2^61 - 1 (Mersenne prime)
    CHECK(!is_prime_u64(2147483647ull * 3));

    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(101));
    CHECK(!is_odd_prime(2));
    CHECK(!is_odd_prime(1));
    CHECK(!is_odd_prime(15));
}

TEST_CASE("odd prime enumeration") {
    CHECK(odd_primes_in(3, 30) == std::vector<long long>{3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(odd_primes_in(1, 4) == std::vector<long long>{3});
    CHECK(odd_primes_in(24, 28).empty());
    CHECK(odd_primes_in(97, 97) == std::vector<long long>{97});
    CHECK_THROWS_AS(odd_primes_in(10, 9), std::domain_error);
}

TEST_CASE("integer square root is exact") {
    CHECK(isqrt_ll(0) == 0);
    CHECK(isqrt_ll(1) == 1);
    CHECK(isqrt_ll(8) == 2);
    CHECK(isqrt_ll(9) == 3);
    CHECK(isqrt_ll(10) == 3);
    long long big = 1000000000LL;
    CHECK(isqrt_ll(big * big) == big);
    CHECK(isqrt_ll(big * big - 1) == big - 1);
    CHECK_THROWS_AS(isqrt_ll(-1), std::domain_error);
}

TEST_CASE("require_odd_prime names the offending value") {
    CHECK_NOTHROW(require_odd_prime(7, "test"));
    CHECK_THROWS_AS(require_odd_prime(8, "test"), std::domain_error);
    CHECK_THROWS_AS(require_odd_prime(2, "test"), std::domain_error);
}

TEST_CASE("frac_of produces the same value in both numeric types") {
    CHECK(frac_of<double>(1, 4) == 0.25);
    CHECK(frac_of<Rational>(1, 4) == make_rational(1, 4));
    CHECK(frac_of<Rational>(-2, 8) == make_rational(-1, 4));
}
