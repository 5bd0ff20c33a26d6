#include "latwce/tn.hpp"

#include "latwce/parallel.hpp"

#include <cmath>

namespace latwce {

namespace {

void check_kappa(long long n, long long kappa) {
    if (kappa < 1 || kappa > n - 1)
        throw std::domain_error("tn: kappa = " + std::to_string(kappa) + " outside {1,...," + std::to_string(n - 1) +
                                "}");
}

// |r(q kappa, n)| for ascending q via an incremental residue; q kappa is
// never divisible by n (n prime, q < n, kappa < n), so the result is >= 1.
struct AbsResidueIter {
    long long n, step, j = 0;
    explicit AbsResidueIter(long long n_, long long kappa) : n(n_), step(kappa % n_) {}
    long long next() {
        j += step;
        if (j >= n) j -= n;
        return j <= (n - 1) / 2 ? j : n - j;
    }
};

} // namespace

double tn_value_double(long long n, long long kappa) {
    require_odd_prime(n, "tn_value");
    check_kappa(n, kappa);
    AbsResidueIter it(n, kappa);
    double sum = 0.0;
    for (long long q = 1; q <= (n - 1) / 2; ++q)
        sum += 1.0 / static_cast<double>(q * it.next());
    return sum;
}

Rational tn_value_exact(long long n, long long kappa) {
    require_odd_prime(n, "tn_value");
    check_kappa(n, kappa);
    // Accumulate 1/(q r) over a running-lcm denominator; one canonicalize at
    // the end. The lcm stays modest because every q r is ((n-1)/2)-smooth.
    mpz_class den(1), num(0);
    AbsResidueIter it(n, kappa);
    for (long long q = 1; q <= (n - 1) / 2; ++q) {
        unsigned long qr = static_cast<unsigned long>(q * it.next());
        mpz_class g;
        mpz_gcd_ui(g.get_mpz_t(), den.get_mpz_t(), qr);
        mpz_class scale = mpz_class(qr) / g;
        if (scale != 1) {
            num *= scale;
            den *= scale;
        }
        num += den / static_cast<long>(qr);
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Scalar tn_value(long long n, long long kappa, Mode mode) {
    return mode == Mode::Exact ? Scalar::exact(tn_value_exact(n, kappa)) : Scalar::floating(tn_value_double(n, kappa));
}

TnTable tn_table(long long n, Mode mode) {
    require_odd_prime(n, "tn_table");
    if (n > kTnTableCapN)
        throw capacity_error("tn_table: n = " + std::to_string(n) + " exceeds the O(n^2) guard (" +
                             std::to_string(kTnTableCapN) + ")");
    TnTable table;
    table.n = n;
    table.mode = mode;
    table.values.assign(static_cast<std::size_t>(n - 1), Scalar());
    parallel_chunks(n - 1, 16, [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t i = b; i < e; ++i) {
            long long kappa = i + 1;
            table.values[static_cast<std::size_t>(i)] =
                mode == Mode::Exact ? Scalar::exact(tn_value_exact(n, kappa))
                                    : Scalar::floating(tn_value_double(n, kappa));
        }
    });
    return table;
}

const Scalar& TnTable::at(long long kappa) const {
    check_kappa(n, kappa);
    return values[static_cast<std::size_t>(kappa - 1)];
}

Scalar tn_mean_closed_form(long long n, Mode mode) {
    require_odd_prime(n, "tn_mean");
    long long half = (n - 1) / 2;
    if (mode == Mode::Exact) {
        Rational h = harmonic_exact(half);
        return Scalar::exact(Rational(make_rational(2, n - 1) * h * h));
    }
    double h = harmonic_double(half);
    return Scalar::floating(2.0 / static_cast<double>(n - 1) * h * h);
}

TnMean tn_mean(const TnTable& table) {
    Scalar closed = tn_mean_closed_form(table.n, table.mode);
    Scalar mean;
    if (table.mode == Mode::Exact) {
        Rational sum = make_rational(0);
        for (const auto& v : table.values) sum += v.rational();
        mean = Scalar::exact(Rational(sum * make_rational(1, table.n - 1)));
        if (mean.rational() != closed.rational())
            throw std::logic_error("tn_mean: empirical mean differs from the closed form (internal error), n = " +
                                   std::to_string(table.n));
    } else {
        std::vector<double> vals;
        vals.reserve(table.values.size());
        for (const auto& v : table.values) vals.push_back(v.as_double());
        mean = Scalar::floating(pairwise_sum(vals) / static_cast<double>(table.n - 1));
        double a = mean.as_double(), b = closed.as_double();
        if (std::abs(a - b) > 1e-12 * std::max({std::abs(a), std::abs(b), 1.0}))
            throw std::logic_error("tn_mean: empirical mean differs from the closed form beyond 1e-12 (internal "
                                   "error), n = " +
                                   std::to_string(table.n));
    }
    return TnMean{mean, closed};
}

Scalar tn_max(const TnTable& table) {
    Scalar best = table.values.at(0);
    for (const auto& v : table.values)
        if (v > best) best = v;
    return best;
}

long long count_at_or_above(const TnTable& table, const Scalar& t) {
    bool t_positive = t.is_exact() ? sgn(t.rational()) > 0 : t.as_double() > 0.0;
    if (!t_positive) throw std::domain_error("count_at_or_above: threshold must be > 0");
    long long count = 0;
    if (table.mode == Mode::Exact && t.is_exact()) {
        for (const auto& v : table.values)
            if (v.rational() >= t.rational()) ++count;
    } else {
        double td = t.as_double();
        for (const auto& v : table.values)
            if (v.as_double() >= td - 1e-15) ++count;
    }
    return count;
}

LemmaCheck lemma_check(const TnTable& table) {
    double n = static_cast<double>(table.n);
    double threshold = 4.0 * std::log(n) / std::sqrt(n);
    double bound = 4.0 * std::sqrt(n) * std::log(n);
    long long count = count_at_or_above(table, Scalar::floating(threshold));
    return LemmaCheck{table.n, threshold, count, bound, static_cast<double>(count) <= bound};
}

FalsificationCheck conjecture_falsification_check(const TnTable& table) {
    if (table.n < 7)
        throw std::domain_error("conjecture_falsification_check: requires n >= 7 (so (n-1)/2 >= sqrt(n)), got n = " +
                                std::to_string(table.n));
    double threshold = 1.0 / std::sqrt(static_cast<double>(table.n));
    long long floor_sqrt_n = isqrt_ll(table.n);
    long long count = count_at_or_above(table, Scalar::floating(threshold));
    return FalsificationCheck{table.n, threshold, count, floor_sqrt_n, count >= floor_sqrt_n};
}

} // namespace latwce
