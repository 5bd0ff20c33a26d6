// include/latwce/bounds.hpp — right-hand sides of the mean-square error
// inequality chain
//
//   e2_avg(n)  <=  proposition_rhs  <=  intermediate_rhs  <=  final_rhs,
//
// their per-order constants, and the full-chain verifier. All values here are
// FLOAT: the formulas involve pi and log. The spelled-out forms, with
// m = |u|, A = (1/(2 pi^2)) (n/(n-1)) and beta = 10 pi^2 log(n)/(9 n):
//
//   proposition_rhs  = (1/n) sum_m W_m [ c(m) + A^m sum_kappa (T_n(kappa)+beta)^m ]
//   intermediate_rhs = (1/n) sum_m W_m [ c(m) + A^m c_tilde(m) sqrt(n) log(n) ]
//   final_rhs        = (log(n)/sqrt(n)) sum_m W_m C(m)
//
// where W_m = sum_{|u|=m} gamma_u. The second line replaces the kappa-sum by
// its worst case: at most 4 sqrt(n) log(n) values reach the high threshold
// (each then bounded via T <= pi^2/6), all others stay below it.

#pragma once

#include "latwce/tn.hpp"
#include "latwce/weights.hpp"

#include <functional>
#include <string>
#include <vector>

namespace latwce {

/// c(m) = 2/3^m + 1/4^m.
double bound_c(int m);
/// c_tilde(m) = 4 (23 pi^2/18)^m + (4 + 10 pi^2/9)^m.
double bound_c_tilde(int m);
/// C(m) = 2/3^m + 1/4^m + 4 (23/24)^m + (3/pi^2 + 5/6)^m
///      = c(m) + (3/(4 pi^2))^m c_tilde(m).
double bound_C(int m);

double proposition_rhs(long long n, const Weights& w, const TnTable& table);
double intermediate_rhs(long long n, const Weights& w);
/// Diagnostic variant of intermediate_rhs that uses the table's actual count
/// of high-threshold kappa instead of the worst-case cap. Reported alongside
/// the chain but never asserted against it.
double intermediate_rhs_actual_kn(long long n, const Weights& w, const TnTable& table);
double final_rhs(long long n, const Weights& w);

struct BoundReport {
    long long n = 0;
    int d = 0;
    std::string weights;
    double e2_avg = 0;
    double prop_rhs = 0;
    double intermediate_rhs = 0;
    double intermediate_rhs_actual_kn = 0;
    double final_rhs = 0;
    double good_z_error_bound = 0; // sqrt(final_rhs), the error e(n,z) guaranteed for the best z
    bool pass_avg_le_prop = false;
    bool pass_prop_le_intermediate = false;
    bool pass_intermediate_le_final = false;
    bool chain_pass = false;
};

/// Computes e2_avg by the factorized average, evaluates all three RHS values
/// and checks each link with 1e-12 relative slack.
BoundReport verify_chain(long long n, int d, const Weights& w);

/// One row per dimension in the doubling schedule 1, 2, 4, ..., d_max.
struct DimReportRow {
    int d = 0;
    double c_sum = 0;            // sum over nonempty u of gamma_u C(|u|)
    double gamma_partial_sum = 0; // sum_{j<=d} gamma_j
};

struct DimReport {
    std::vector<DimReportRow> rows;
    bool appears_bounded = false; // last relative increment < 1e-6
};

/// Sweeps product weights gamma_j = rule(j) over growing dimension and
/// reports whether sum_u gamma_u C(|u|) appears bounded.
DimReport dimension_independence_report(const std::function<Rational(int)>& rule, int d_max = 64);

} // namespace latwce
