#include "latwce/numeric.hpp"

#include <cmath>

namespace latwce {

Scalar b1(const Scalar& x) {
    if (x.is_exact()) return Scalar::exact(b1<Rational>(x.rational()));
    return Scalar::floating(b1<double>(x.as_double()));
}

Scalar b2(const Scalar& x) {
    if (x.is_exact()) return Scalar::exact(b2<Rational>(x.rational()));
    return Scalar::floating(b2<double>(x.as_double()));
}

void require_odd_prime(long long n, const char* who) {
    if (!is_odd_prime(n))
        throw std::domain_error(std::string(who) + ": n = " + std::to_string(n) + " is not an odd prime");
}

SignedResidue signed_residue(long long j, long long n) {
    if (n < 3 || n % 2 == 0)
        throw std::domain_error("signed_residue: modulus must be odd and >= 3, got " + std::to_string(n));
    if (j < 0) throw std::domain_error("signed_residue: j must be >= 0");
    return SignedResidue{signed_residue_value(j, n), n};
}

Rational harmonic_exact(long long m) {
    if (m < 1) throw std::domain_error("harmonic: m must be >= 1");
    // Accumulate over a running lcm denominator; one canonicalize at the end.
    mpz_class den(1), num(0);
    for (long long j = 1; j <= m; ++j) {
        mpz_class g;
        mpz_gcd_ui(g.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(j));
        mpz_class scale = mpz_class(static_cast<long>(j)) / g;
        num *= scale;
        den *= scale;
        num += den / static_cast<long>(j);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double harmonic_double(long long m) {
    if (m < 1) throw std::domain_error("harmonic: m must be >= 1");
    double s = 0.0;
    for (long long j = m; j >= 1; --j) s += 1.0 / static_cast<double>(j);
    return s;
}

Scalar harmonic(long long m, Mode mode) {
    return mode == Mode::Exact ? Scalar::exact(harmonic_exact(m)) : Scalar::floating(harmonic_double(m));
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 2^64 (Sorenson–Webster).
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_odd_prime(long long n) {
    if (n < 3) return false;
    return (n % 2 == 1) && is_prime_u64(static_cast<std::uint64_t>(n));
}

std::vector<long long> odd_primes_in(long long lo, long long hi) {
    if (lo > hi) throw std::domain_error("odd_primes_in: lo > hi");
    std::vector<long long> out;
    long long start = std::max<long long>(lo, 3);
    if (start % 2 == 0) ++start;
    for (long long n = start; n <= hi; n += 2)
        if (is_prime_u64(static_cast<std::uint64_t>(n))) out.push_back(n);
    return out;
}

long long isqrt_ll(long long n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

} // namespace latwce
