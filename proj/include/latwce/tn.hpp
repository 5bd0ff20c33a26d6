// include/latwce/tn.hpp — the number-theoretic quantity
// T_n(kappa) = sum_{q=1}^{(n-1)/2} 1/(q |r(q kappa, n)|) for odd prime n,
// its table over kappa, exact mean, and threshold-count statistics.

#pragma once

#include "latwce/numeric.hpp"

#include <vector>

namespace latwce {

/// O(n^2) guard for the full table.
inline constexpr long long kTnTableCapN = 100000;

/// T_n(1), ..., T_n(n-1) in one mode.
struct TnTable {
    long long n = 0;
    Mode mode = Mode::Float;
    std::vector<Scalar> values; // index kappa-1

    const Scalar& at(long long kappa) const;
};

Scalar tn_value(long long n, long long kappa, Mode mode);
double tn_value_double(long long n, long long kappa);
Rational tn_value_exact(long long n, long long kappa);

/// All n-1 values; construction is parallel over kappa. n <= 10^5.
TnTable tn_table(long long n, Mode mode);

/// Empirical mean of the table plus the closed form (2/(n-1)) H_{(n-1)/2}^2.
/// The two must agree — exactly in EXACT mode, to 1e-12 relative in FLOAT —
/// or an internal-consistency error (logic_error) is thrown.
struct TnMean {
    Scalar empirical;
    Scalar closed_form;
};
TnMean tn_mean(const TnTable& table);
Scalar tn_mean_closed_form(long long n, Mode mode);

Scalar tn_max(const TnTable& table);

/// |{kappa : T_n(kappa) >= t}|. EXACT-vs-EXACT comparisons are exact; as soon
/// as either side is FLOAT the comparison happens in double with a 1e-15
/// absolute tie tolerance, so values that close to t count as exceeding.
long long count_at_or_above(const TnTable& table, const Scalar& t);

/// Count of kappa with T_n(kappa) >= 4 log(n)/sqrt(n), against the cap
/// 4 sqrt(n) log(n). Thresholds involve log, so this check is FLOAT-valued
/// regardless of the table's mode.
struct LemmaCheck {
    long long n;
    double threshold;   // 4 log(n)/sqrt(n)
    long long count;
    double bound;       // 4 sqrt(n) log(n)
    bool pass;          // count <= bound
};
LemmaCheck lemma_check(const TnTable& table);

/// Count of kappa with T_n(kappa) >= 1/sqrt(n), against floor(sqrt(n)).
/// Requires n >= 7 (so that (n-1)/2 >= sqrt(n)).
struct FalsificationCheck {
    long long n;
    double threshold;   // 1/sqrt(n)
    long long count_low_threshold;
    long long floor_sqrt_n;
    bool pass;          // count >= floor(sqrt(n))
};
FalsificationCheck conjecture_falsification_check(const TnTable& table);

} // namespace latwce
