#include "latwce/bounds.hpp"

#include "latwce/wce.hpp"

#include <cmath>
#include <numbers>

namespace latwce {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

void check_bound_n(long long n, const char* who) {
    if (n < 3) throw std::domain_error(std::string(who) + ": requires n >= 3, got n = " + std::to_string(n));
}

// sum_m W_m * per_order(m) for m = 1..d, m ascending.
double order_sum(const std::vector<double>& W, const std::function<double(int)>& per_order) {
    double acc = 0.0;
    for (std::size_t m = 1; m <= W.size(); ++m) acc += W[m - 1] * per_order(static_cast<int>(m));
    return acc;
}

} // namespace

double bound_c(int m) { return 2.0 / std::pow(3.0, m) + 1.0 / std::pow(4.0, m); }

double bound_c_tilde(int m) {
    return 4.0 * std::pow(23.0 * kPi2 / 18.0, m) + std::pow(4.0 + 10.0 * kPi2 / 9.0, m);
}

double bound_C(int m) {
    return 2.0 / std::pow(3.0, m) + 1.0 / std::pow(4.0, m) + 4.0 * std::pow(23.0 / 24.0, m) +
           std::pow(3.0 / kPi2 + 5.0 / 6.0, m);
}

double proposition_rhs(long long n, const Weights& w, const TnTable& table) {
    require_odd_prime(n, "proposition_rhs");
    if (table.n != n)
        throw std::domain_error("proposition_rhs: table is for n = " + std::to_string(table.n) + ", not " +
                                std::to_string(n));
    const int d = w.dimension();
    auto W = w.by_order_double();
    const double nn = static_cast<double>(n);
    const double beta = 10.0 * kPi2 * std::log(nn) / (9.0 * nn);
    const double A = (1.0 / (2.0 * kPi2)) * (nn / (nn - 1.0));

    // S[m-1] = sum_kappa (T_n(kappa) + beta)^m, powers built incrementally.
    std::vector<double> S(static_cast<std::size_t>(d), 0.0);
    for (const auto& v : table.values) {
        const double t = v.as_double() + beta;
        double p = 1.0;
        for (int m = 1; m <= d; ++m) {
            p *= t;
            S[static_cast<std::size_t>(m) - 1] += p;
        }
    }

    double acc = 0.0;
    double Apow = 1.0;
    for (int m = 1; m <= d; ++m) {
        Apow *= A;
        acc += W[static_cast<std::size_t>(m) - 1] * (bound_c(m) + Apow * S[static_cast<std::size_t>(m) - 1]);
    }
    return acc / nn;
}

double intermediate_rhs(long long n, const Weights& w) {
    require_odd_prime(n, "intermediate_rhs");
    check_bound_n(n, "intermediate_rhs");
    auto W = w.by_order_double();
    const double nn = static_cast<double>(n);
    const double A = (1.0 / (2.0 * kPi2)) * (nn / (nn - 1.0));
    const double snlog = std::sqrt(nn) * std::log(nn);
    double acc = 0.0;
    double Apow = 1.0;
    for (int m = 1; m <= w.dimension(); ++m) {
        Apow *= A;
        acc += W[static_cast<std::size_t>(m) - 1] * (bound_c(m) + Apow * bound_c_tilde(m) * snlog);
    }
    return acc / nn;
}

double intermediate_rhs_actual_kn(long long n, const Weights& w, const TnTable& table) {
    require_odd_prime(n, "intermediate_rhs_actual_kn");
    check_bound_n(n, "intermediate_rhs_actual_kn");
    if (table.n != n)
        throw std::domain_error("intermediate_rhs_actual_kn: table is for n = " + std::to_string(table.n) + ", not " +
                                std::to_string(n));
    auto W = w.by_order_double();
    const double nn = static_cast<double>(n);
    const double A = (1.0 / (2.0 * kPi2)) * (nn / (nn - 1.0));
    const auto high = lemma_check(table);
    const double cnt = static_cast<double>(high.count);
    const double low_term = (4.0 + 10.0 * kPi2 / 9.0) * std::log(nn) / std::sqrt(nn);
    const double high_term = 23.0 * kPi2 / 18.0;
    double acc = 0.0;
    double Apow = 1.0;
    for (int m = 1; m <= w.dimension(); ++m) {
        Apow *= A;
        double s_bound = cnt * std::pow(high_term, m) + (nn - 1.0 - cnt) * std::pow(low_term, m);
        acc += W[static_cast<std::size_t>(m) - 1] * (bound_c(m) + Apow * s_bound);
    }
    return acc / nn;
}

double final_rhs(long long n, const Weights& w) {
    check_bound_n(n, "final_rhs");
    auto W = w.by_order_double();
    const double nn = static_cast<double>(n);
    return std::log(nn) / std::sqrt(nn) * order_sum(W, bound_C);
}

namespace {

// a <= b with 1e-12 relative slack; exact zeros compare as equal.
bool link_ok(double a, double b) { return a <= b + 1e-12 * std::max(std::abs(a), std::abs(b)); }

} // namespace

BoundReport verify_chain(long long n, int d, const Weights& w) {
    if (d != w.dimension())
        throw std::domain_error("verify_chain: d = " + std::to_string(d) + " does not match weights d = " +
                                std::to_string(w.dimension()));
    require_odd_prime(n, "verify_chain");
    check_bound_n(n, "verify_chain");

    BoundReport r;
    r.n = n;
    r.d = d;
    r.weights = w.describe();
    r.e2_avg = avg_wce_squared_factorized(n, d, w, Mode::Float).value.as_double();
    auto table = tn_table(n, Mode::Float);
    r.prop_rhs = proposition_rhs(n, w, table);
    r.intermediate_rhs = intermediate_rhs(n, w);
    r.intermediate_rhs_actual_kn = intermediate_rhs_actual_kn(n, w, table);
    r.final_rhs = final_rhs(n, w);
    r.good_z_error_bound = std::sqrt(r.final_rhs);
    r.pass_avg_le_prop = link_ok(r.e2_avg, r.prop_rhs);
    r.pass_prop_le_intermediate = link_ok(r.prop_rhs, r.intermediate_rhs);
    r.pass_intermediate_le_final = link_ok(r.intermediate_rhs, r.final_rhs);
    r.chain_pass = r.pass_avg_le_prop && r.pass_prop_le_intermediate && r.pass_intermediate_le_final;
    return r;
}

DimReport dimension_independence_report(const std::function<Rational(int)>& rule, int d_max) {
    if (d_max < 1) throw std::domain_error("dimension_independence_report: d_max must be >= 1");
    DimReport rep;
    std::vector<Rational> gammas;
    // Doubling schedule 1, 2, 4, ... clamped so that the last row is d_max.
    for (int d = 1; d <= d_max; d = std::min(d * 2, d == d_max ? d_max + 1 : d_max)) {
        while (static_cast<int>(gammas.size()) < d) {
            Rational g = rule(static_cast<int>(gammas.size()) + 1);
            if (sgn(g) < 0) throw std::domain_error("dimension_independence_report: rule produced a negative weight");
            gammas.push_back(std::move(g));
        }
        DimReportRow row;
        row.d = d;
        auto W = Weights::product(gammas).by_order_double();
        row.c_sum = order_sum(W, bound_C);
        double partial = 0.0;
        for (const auto& g : gammas) partial += to_double(g);
        row.gamma_partial_sum = partial;
        rep.rows.push_back(row);
    }
    if (rep.rows.size() >= 2) {
        double last = rep.rows[rep.rows.size() - 1].c_sum;
        double prev = rep.rows[rep.rows.size() - 2].c_sum;
        double denom = std::max(std::abs(last), 1.0);
        rep.appears_bounded = std::abs(last - prev) < 1e-6 * denom;
    } else {
        rep.appears_bounded = true;
    }
    return rep;
}

} // namespace latwce
