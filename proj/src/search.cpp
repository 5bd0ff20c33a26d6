// src/search.cpp — generating-vector searches. All candidate evaluations run
// in FLOAT through wce_squared_double; the reduction keeps the smallest e^2
// and, among equal values, the lexicographically smallest z. Exhaustive
// enumeration visits candidates in lex order, so "earliest index wins ties"
// is the lex rule; random search compares drawn vectors explicitly. Chunked
// evaluation merges partial minima in chunk order, so results are identical
// for every worker count.

#include "latwce/search.hpp"

#include "latwce/parallel.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace latwce {

const char* search_method_name(SearchMethod m) {
    switch (m) {
        case SearchMethod::Exhaustive: return "exhaustive";
        case SearchMethod::Random: return "random";
        case SearchMethod::Cbc: return "cbc";
    }
    throw std::logic_error("search_method_name: unknown method");
}

namespace {

/// (n-1)^d, or -1 on overflow past the cap.
long long candidate_count(long long n, int d, long long cap) {
    long long total = 1;
    for (int j = 0; j < d; ++j) {
        if (total > cap / (n - 1)) return -1;
        total *= n - 1;
    }
    return total;
}

/// Candidate index -> z, with the last coordinate varying fastest, so index
/// order equals lexicographic order on z.
std::vector<long long> decode_candidate(long long index, long long n, int d) {
    std::vector<long long> z(static_cast<std::size_t>(d));
    for (int j = d - 1; j >= 0; --j) {
        z[static_cast<std::size_t>(j)] = 1 + index % (n - 1);
        index /= n - 1;
    }
    return z;
}

struct BestCandidate {
    double e2 = std::numeric_limits<double>::infinity();
    long long index = -1; // candidate index in lex order; -1 = none seen
};

/// Earlier index wins ties, preserving the lexicographic tie-break.
BestCandidate merge_best(const BestCandidate& a, const BestCandidate& b) {
    if (b.index < 0) return a;
    if (a.index < 0) return b;
    return b.e2 < a.e2 ? b : a;
}

double evaluate_z(long long n, const std::vector<long long>& z, const WeightsData<double>& wd) {
    return wce_squared_double(LatticePointSet::build(GeneratingVector(n, z)), wd);
}

/// EXACT re-verification of the winning vector on small instances.
void attach_exact_recheck(SearchResult& r, const Weights& w) {
    long long n = r.best.n;
    int d = r.best.dimension();
    if (n > kExactRecheckMaxN || d > kExactRecheckMaxD) return;
    Rational exact = wce_squared_exact(LatticePointSet::build(r.best), realize<Rational>(w));
    double f = r.best_e2.as_double();
    double e = to_double(exact);
    if (std::abs(f - e) > 1e-9 * std::max({std::abs(f), std::abs(e), 1.0}))
        throw std::logic_error("internal error: exact recheck of search result disagrees with FLOAT value");
    r.best_e2_exact = exact;
}

} // namespace

SearchResult exhaustive_search(long long n, int d, const Weights& w) {
    if (n < 2) throw std::domain_error("exhaustive_search: n must be >= 2");
    if (d < 1) throw std::domain_error("exhaustive_search: d must be >= 1");
    if (d != w.dimension())
        throw std::domain_error("exhaustive_search: weights dimension " + std::to_string(w.dimension()) +
                                " does not match d = " + std::to_string(d));
    long long total = candidate_count(n, d, kExhaustiveSearchCap);
    if (total < 0)
        throw capacity_error("exhaustive_search: (n-1)^d exceeds the candidate cap " +
                             std::to_string(kExhaustiveSearchCap));

    WeightsData<double> wd = realize<double>(w);
    BestCandidate best = ordered_reduce<BestCandidate>(
        total, 64, BestCandidate{},
        [&](std::int64_t b, std::int64_t e) {
            BestCandidate local;
            for (std::int64_t t = b; t < e; ++t) {
                double v = evaluate_z(n, decode_candidate(t, n, d), wd);
                if (local.index < 0 || v < local.e2) local = BestCandidate{v, t};
            }
            return local;
        },
        merge_best);

    SearchResult r{SearchMethod::Exhaustive,
                   GeneratingVector(n, decode_candidate(best.index, n, d)),
                   Scalar::floating(best.e2),
                   std::nullopt,
                   total,
                   std::nullopt,
                   std::nullopt,
                   {}};
    attach_exact_recheck(r, w);
    return r;
}

SearchResult random_search(long long n, int d, const Weights& w, long long trials, std::uint64_t seed) {
    if (n < 2) throw std::domain_error("random_search: n must be >= 2");
    if (d < 1) throw std::domain_error("random_search: d must be >= 1");
    if (d != w.dimension())
        throw std::domain_error("random_search: weights dimension " + std::to_string(w.dimension()) +
                                " does not match d = " + std::to_string(d));
    if (trials < 1) throw std::domain_error("random_search: trials must be >= 1");

    // One sequential draw stream: candidate t is fully drawn before t+1, so
    // the list depends only on (seed, trials, n, d).
    std::mt19937_64 rng(seed);
    const std::uint64_t range = static_cast<std::uint64_t>(n - 1);
    const std::uint64_t reject_below = std::numeric_limits<std::uint64_t>::max() % range + 1 == range
                                           ? 0
                                           : std::numeric_limits<std::uint64_t>::max() -
                                                 std::numeric_limits<std::uint64_t>::max() % range;
    auto draw_component = [&]() -> long long {
        for (;;) {
            std::uint64_t x = rng();
            if (reject_below == 0 || x < reject_below) return 1 + static_cast<long long>(x % range);
        }
    };
    std::vector<std::vector<long long>> candidates(static_cast<std::size_t>(trials));
    for (auto& z : candidates) {
        z.resize(static_cast<std::size_t>(d));
        for (auto& c : z) c = draw_component();
    }

    WeightsData<double> wd = realize<double>(w);
    // Ties keep the earliest trial whose z is lexicographically smallest.
    auto better = [&](double v, const std::vector<long long>& z, const BestCandidate& best) {
        if (best.index < 0 || v < best.e2) return true;
        return v == best.e2 && z < candidates[static_cast<std::size_t>(best.index)];
    };
    BestCandidate best = ordered_reduce<BestCandidate>(
        trials, 64, BestCandidate{},
        [&](std::int64_t b, std::int64_t e) {
            BestCandidate local;
            for (std::int64_t t = b; t < e; ++t) {
                const auto& z = candidates[static_cast<std::size_t>(t)];
                double v = evaluate_z(n, z, wd);
                if (better(v, z, local)) local = BestCandidate{v, t};
            }
            return local;
        },
        [&](const BestCandidate& a, const BestCandidate& b2) {
            if (b2.index < 0) return a;
            if (a.index < 0) return b2;
            return better(b2.e2, candidates[static_cast<std::size_t>(b2.index)], a) ? b2 : a;
        });

    SearchResult r{SearchMethod::Random,
                   GeneratingVector(n, candidates[static_cast<std::size_t>(best.index)]),
                   Scalar::floating(best.e2),
                   std::nullopt,
                   trials,
                   seed,
                   std::string("mt19937_64-rejection"),
                   {}};
    attach_exact_recheck(r, w);
    return r;
}

SearchResult cbc_search(long long n, int d, const Weights& w) {
    if (n < 3) throw std::domain_error("cbc_search: n must be >= 3");
    if (d < 1) throw std::domain_error("cbc_search: d must be >= 1");
    if (d != w.dimension())
        throw std::domain_error("cbc_search: weights dimension " + std::to_string(w.dimension()) +
                                " does not match d = " + std::to_string(d));

    std::vector<long long> z;
    std::vector<double> stage_e2;
    long long evaluations = 0;
    for (int s = 1; s <= d; ++s) {
        WeightsData<double> ws = realize<double>(w.restricted_to(s));
        BestCandidate best = ordered_reduce<BestCandidate>(
            n - 1, 64, BestCandidate{},
            [&](std::int64_t b, std::int64_t e) {
                BestCandidate local;
                std::vector<long long> cand = z;
                cand.push_back(0);
                for (std::int64_t t = b; t < e; ++t) {
                    cand.back() = 1 + t;
                    double v = evaluate_z(n, cand, ws);
                    if (local.index < 0 || v < local.e2) local = BestCandidate{v, t};
                }
                return local;
            },
            merge_best);
        z.push_back(1 + best.index);
        stage_e2.push_back(best.e2);
        evaluations += n - 1;
    }

    SearchResult r{SearchMethod::Cbc,
                   GeneratingVector(n, z),
                   Scalar::floating(stage_e2.back()),
                   std::nullopt,
                   evaluations,
                   std::nullopt,
                   std::nullopt,
                   std::move(stage_e2)};
    attach_exact_recheck(r, w);
    return r;
}

} // namespace latwce
