// tools/latwce_main.cpp — the latwce command-line front end.
//
// Exit codes: 0 = success (including all-checks-pass for verify/suite),
// 1 = usage or domain error, 2 = a verification assertion failed.
// All canonical outputs (stdout or --out) are byte-identical for identical
// configurations regardless of --threads; wall-clock timings only ever go to
// stderr or behind the explicit suite --timings flag.

#include "latwce/io.hpp"
#include "latwce/parallel.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using namespace latwce;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

struct CommonArgs {
    long long n = 0;
    std::vector<long long> z;
    int d = 0;
    std::string weights;
    std::string out;
    bool exact = false;
};

int run_points(const CommonArgs& a, const std::string& format) {
    LatticePointSet pts = LatticePointSet::build(GeneratingVector(a.n, a.z));
    write_output(a.out, io::points_csv(pts, format == "frac"));
    return 0;
}

int run_wce(const CommonArgs& a, const std::string& method) {
    if (a.d != 0 && a.d != static_cast<int>(a.z.size()))
        throw std::domain_error("--d disagrees with the length of --z");
    GeneratingVector gv(a.n, a.z);
    Weights w = io::parse_weight_spec(a.weights);
    Mode mode = a.exact ? Mode::Exact : Mode::Float;
    WceResult r = method == "quadrature-identity" ? wce_squared_via_quadrature_identity(gv, w, mode)
                                                  : wce_squared(gv, w, mode);
    write_output(a.out, io::dump(io::wce_result_to_json(r)));
    return 0;
}

int run_avg_wce(const CommonArgs& a, const std::string& method) {
    Weights w = io::parse_weight_spec(a.weights);
    Mode mode = a.exact ? Mode::Exact : Mode::Float;
    WceResult r = method == "exhaustive" ? avg_wce_squared_exhaustive(a.n, a.d, w, mode)
                                         : avg_wce_squared_factorized(a.n, a.d, w, mode);
    write_output(a.out, io::dump(io::wce_result_to_json(r)));
    return 0;
}

int run_tn(long long n, long long kappa, bool stats, bool exact, const std::string& csv_path,
           const std::string& out) {
    Mode mode = exact ? Mode::Exact : Mode::Float;
    if (!csv_path.empty()) write_output(csv_path, io::tn_csv(tn_table(n, mode)));
    if (kappa != 0) {
        write_output(out, io::dump(io::tn_value_to_json(n, kappa, tn_value(n, kappa, mode))));
    } else if (stats) {
        write_output(out, io::dump(io::tn_stats_to_json(tn_table(n, mode))));
    } else if (csv_path.empty()) {
        write_output(out, io::tn_csv(tn_table(n, mode)));
    }
    return 0;
}

int run_verify(long long n_min, long long n_max, int d, const std::string& weights, const std::string& out) {
    Weights w = io::parse_weight_spec(weights);
    std::vector<long long> primes = odd_primes_in(n_min, n_max);
    if (primes.empty()) throw std::domain_error("no odd primes in [" + std::to_string(n_min) + ", " +
                                                std::to_string(n_max) + "]");
    std::vector<BoundReport> reports;
    long long holds = 0;
    for (long long n : primes) {
        reports.push_back(verify_chain(n, d, w));
        if (reports.back().chain_pass) ++holds;
    }
    write_output(out, io::dump(io::bound_reports_to_json(reports)));
    std::cerr << "bound chain holds for " << holds << "/" << primes.size() << " odd primes in [" << n_min
              << ", " << n_max << "]\n";
    return holds == static_cast<long long>(primes.size()) ? 0 : 2;
}

int run_search(const CommonArgs& a, const std::string& method, long long trials, std::uint64_t seed) {
    Weights w = io::parse_weight_spec(a.weights);
    SearchResult r = method == "exhaustive" ? exhaustive_search(a.n, a.d, w)
                     : method == "random"   ? random_search(a.n, a.d, w, trials, seed)
                                            : cbc_search(a.n, a.d, w);
    write_output(a.out, io::dump(io::search_result_to_json(r)));
    return 0;
}

int run_integrate(const CommonArgs& a, const std::string& name) {
    GeneratingVector gv(a.n, a.z);
    LatticePointSet pts = LatticePointSet::build(gv);
    std::vector<TestIntegrand> integrands = builtin_integrands(gv.dimension());
    const TestIntegrand& f = find_integrand(integrands, name);
    Scalar value = qmc_quadrature(f, pts, a.exact ? Mode::Exact : Mode::Float);
    write_output(a.out, io::dump(io::integrate_result_to_json(a.n, a.z, f.name, value, f.integral)));
    return 0;
}

int run_suite(bool quick, bool timings, const std::string& out) {
    std::vector<double> ms;
    auto observer = [&](const SuiteCheckOutcome& c, double elapsed_ms) {
        ms.push_back(elapsed_ms);
        std::fprintf(stderr, "[%2d/12] %s %s (%.1f ms)\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str(),
                     elapsed_ms);
    };
    SuiteReport report = latwce::run_suite(quick, observer);
    write_output(out, io::dump(io::suite_report_to_json(report, timings ? &ms : nullptr)));
    return report.all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "latwce: rank-1 lattice rules - the squared worst-case integration error e^2(n,z) in weighted\n"
        "unanchored Sobolev spaces (smoothness 1), its average over all generating vectors, the\n"
        "number-theoretic tables T_n(kappa) behind the mean-square bound, the bound chain certifying\n"
        "existence of good vectors, and generating-vector searches."};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (0 = hardware default; outputs are identical for every setting)");

    CommonArgs points_a, wce_a, avg_a, search_a, integ_a;
    std::string points_format = "dec";
    std::string wce_method = "double-sum", avg_method = "factorized", search_method, integ_name;
    long long tn_n = 0, tn_kappa = 0, verify_min = 0, verify_max = 0, search_trials = 100;
    bool tn_stats = false, tn_exact = false, suite_quick = false, suite_timings = false;
    std::string tn_csv_path, tn_out, verify_weights, verify_out, suite_out;
    int verify_d = 0;
    std::uint64_t search_seed = 1;

    CLI::App* points = app.add_subcommand(
        "points", "Write the lattice points x_i = ({i z_1/n}, ..., {i z_d/n}), i = 0..n-1, as CSV (i,x1,...,xd)");
    points->add_option("--n", points_a.n, "number of points n >= 1")->required();
    points->add_option("--z", points_a.z, "generating vector, e.g. --z 1,4")->required()->delimiter(',');
    points->add_option("--format", points_format, "frac = exact fractions p/q, dec = decimals")
        ->check(CLI::IsMember({"frac", "dec"}));
    points->add_option("--out", points_a.out, "output file (default stdout)");

    CLI::App* wce = app.add_subcommand(
        "wce", "Compute the squared worst-case error e^2(n,z) of the rank-1 lattice rule with generating vector z");
    wce->add_option("--n", wce_a.n, "number of points")->required();
    wce->add_option("--z", wce_a.z, "generating vector")->required()->delimiter(',');
    wce->add_option("--d", wce_a.d, "dimension (optional, must equal the length of --z)");
    wce->add_option("--weights", wce_a.weights, "weight spec: product:[...], order:[...], inline JSON or @file")
        ->required();
    wce->add_flag("--exact", wce_a.exact, "exact rational arithmetic (e2 printed as \"p/q\")");
    wce->add_option("--method", wce_method, "double-sum (default) or quadrature-identity")
        ->check(CLI::IsMember({"double-sum", "quadrature-identity"}));
    wce->add_option("--out", wce_a.out, "output file (default stdout)");

    CLI::App* avg = app.add_subcommand(
        "avg-wce", "Compute the mean of e^2(n,z) over all generating vectors z in {1,...,n-1}^d");
    avg->add_option("--n", avg_a.n, "number of points")->required();
    avg->add_option("--d", avg_a.d, "dimension")->required();
    avg->add_option("--weights", avg_a.weights, "weight spec")->required();
    avg->add_flag("--exact", avg_a.exact, "exact rational arithmetic");
    avg->add_option("--method", avg_method, "factorized (default, O(n^3)) or exhaustive ((n-1)^d rules)")
        ->check(CLI::IsMember({"factorized", "exhaustive"}));
    avg->add_option("--out", avg_a.out, "output file (default stdout)");

    CLI::App* tn = app.add_subcommand(
        "tn", "Evaluate T_n(kappa) = sum_{q=1}^{(n-1)/2} 1/(q |r(q kappa, n)|) for odd prime n: one value "
              "(--kappa), summary statistics (--stats), or the full table as CSV (default)");
    tn->add_option("--n", tn_n, "odd prime modulus")->required();
    CLI::Option* tn_kappa_opt = tn->add_option("--kappa", tn_kappa, "single frequency in {1,...,n-1}");
    CLI::Option* tn_stats_opt =
        tn->add_flag("--stats", tn_stats, "JSON statistics: mean, closed-form mean, max, tail counts");
    tn_kappa_opt->excludes(tn_stats_opt);
    tn->add_flag("--exact", tn_exact, "exact rational arithmetic");
    tn->add_option("--csv", tn_csv_path, "also write the full table (kappa,Tn) to this CSV file");
    tn->add_option("--out", tn_out, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the mean-square bound chain e2_avg <= proposition_rhs <= intermediate_rhs <= "
                  "final_rhs for every odd prime in a range; exit 0 only if every link holds");
    verify->add_option("--n-min", verify_min, "lower end of the prime range")->required();
    verify->add_option("--n-max", verify_max, "upper end of the prime range")->required();
    verify->add_option("--d", verify_d, "dimension")->required();
    verify->add_option("--weights", verify_weights, "weight spec")->required();
    verify->add_option("--out", verify_out, "report file (default stdout), a JSON array with one entry per prime");

    CLI::App* search = app.add_subcommand(
        "search", "Find a generating vector minimizing e^2(n,z): exhaustive enumeration, seeded random "
                  "sampling, or greedy component-by-component construction");
    search->add_option("--n", search_a.n, "number of points")->required();
    search->add_option("--d", search_a.d, "dimension")->required();
    search->add_option("--weights", search_a.weights, "weight spec")->required();
    search->add_option("--method", search_method, "exhaustive, random or cbc")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "random", "cbc"}));
    search->add_option("--trials", search_trials, "random method: number of candidates (default 100)");
    search->add_option("--seed", search_seed, "random method: 64-bit generator seed (default 1)");
    search->add_option("--out", search_a.out, "output file (default stdout)");

    CLI::App* integrate = app.add_subcommand(
        "integrate", "Apply the lattice rule Q_{d,n,z} to a built-in test integrand and report the error "
                     "against its known integral");
    integrate->add_option("--n", integ_a.n, "number of points")->required();
    integrate->add_option("--z", integ_a.z, "generating vector")->required()->delimiter(',');
    integrate->add_option("--f", integ_name, "integrand: const, prod-linear, prod-centered or prod-b2")
        ->required();
    integrate->add_flag("--exact", integ_a.exact, "exact rational arithmetic");
    integrate->add_option("--out", integ_a.out, "output file (default stdout)");

    CLI::App* suite = app.add_subcommand(
        "suite", "Run the 12-check verification suite (exact oracles, method equivalences, T_n sweeps, "
                 "bound chain, determinism); exit 0 only if all checks pass");
    suite->add_flag("--quick", suite_quick, "cap sweeps at n <= 101 (finishes in seconds)");
    suite->add_flag("--timings", suite_timings,
                    "include per-check wall times in the report (makes the bytes run-dependent)");
    suite->add_option("--out", suite_out, "report file (default stdout)");

    // Let --threads appear after the subcommand name as well as before it.
    for (CLI::App* s : {points, wce, avg, tn, verify, search, integrate, suite}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (threads > 0) latwce::set_thread_count(threads);
        if (app.got_subcommand(points)) return run_points(points_a, points_format);
        if (app.got_subcommand(wce)) return run_wce(wce_a, wce_method);
        if (app.got_subcommand(avg)) return run_avg_wce(avg_a, avg_method);
        if (app.got_subcommand(tn)) return run_tn(tn_n, tn_kappa, tn_stats, tn_exact, tn_csv_path, tn_out);
        if (app.got_subcommand(verify)) return run_verify(verify_min, verify_max, verify_d, verify_weights, verify_out);
        if (app.got_subcommand(search)) return run_search(search_a, search_method, search_trials, search_seed);
        if (app.got_subcommand(integrate)) return run_integrate(integ_a, integ_name);
        if (app.got_subcommand(suite)) return run_suite(suite_quick, suite_timings, suite_out);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const latwce::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal assertion failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
