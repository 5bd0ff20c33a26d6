// include/latwce/numeric.hpp — Bernoulli polynomials B1/B2, signed residues,
// harmonic numbers and primality. Everything here is a pure function.

#pragma once

#include "latwce/scalar.hpp"

#include <cstdint>
#include <vector>

namespace latwce {

namespace detail {
template <class T> struct num_traits;
template <> struct num_traits<double> {
    static double frac(long long p, long long q) { return static_cast<double>(p) / static_cast<double>(q); }
};
template <> struct num_traits<Rational> {
    static Rational frac(long long p, long long q) { return make_rational(p, q); }
};
} // namespace detail

/// p/q in the numeric type T (double or Rational).
template <class T> inline T frac_of(long long p, long long q) { return detail::num_traits<T>::frac(p, q); }

template <class T>
inline void check_unit_interval(const T& x, const char* who, bool closed_right) {
    if (x < T(0) || (closed_right ? x > T(1) : !(x < T(1))))
        throw std::domain_error(std::string(who) + ": argument outside " + (closed_right ? "[0,1]" : "[0,1)"));
}

/// B1(x) = x - 1/2 on [0,1].
template <class T>
inline T b1(const T& x) {
    check_unit_interval(x, "b1", true);
    return T(x - frac_of<T>(1, 2));
}

/// B2(x) = x^2 - x + 1/6 on [0,1].
template <class T>
inline T b2(const T& x) {
    check_unit_interval(x, "b2", true);
    return T(x * x - x + frac_of<T>(1, 6));
}

Scalar b1(const Scalar& x);
Scalar b2(const Scalar& x);

/// Representative of j mod n in {-(n-1)/2, ..., (n-1)/2}; n odd, n >= 3.
struct SignedResidue {
    long long value;
    long long modulus;
};

SignedResidue signed_residue(long long j, long long n);

/// Same residue without the struct; callers on hot paths use this.
inline long long signed_residue_value(long long j, long long n) {
    long long m = j % n;
    if (m < 0) m += n;
    return m <= (n - 1) / 2 ? m : m - n;
}

/// H_m = sum_{j=1}^m 1/j.
Rational harmonic_exact(long long m);
double harmonic_double(long long m);
Scalar harmonic(long long m, Mode mode);

/// Deterministic Miller–Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// True iff n is prime and n >= 3.
bool is_odd_prime(long long n);

/// Ascending odd primes in [lo, hi]; empty when none.
std::vector<long long> odd_primes_in(long long lo, long long hi);

/// floor(sqrt(n)) for n >= 0, exact.
long long isqrt_ll(long long n);

void require_odd_prime(long long n, const char* who);

} // namespace latwce
