// include/latwce/search.hpp — minimizing e^2(n,z) over generating vectors:
// exhaustive enumeration, seeded random sampling, and greedy component-by-
// component construction. Searches evaluate in FLOAT; the reported best is
// re-verified in EXACT mode for small instances (n <= 200, d <= 3).

#pragma once

#include "latwce/wce.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace latwce {

enum class SearchMethod { Exhaustive, Random, Cbc };
const char* search_method_name(SearchMethod m);

/// Candidate cap shared with the exhaustive average.
inline constexpr long long kExhaustiveSearchCap = 10'000'000;

/// Instance size up to which the winning z is re-verified exactly.
inline constexpr long long kExactRecheckMaxN = 200;
inline constexpr int kExactRecheckMaxD = 3;

struct SearchResult {
    SearchMethod method;
    GeneratingVector best;
    Scalar best_e2;                         // FLOAT value seen by the search
    std::optional<Rational> best_e2_exact;  // EXACT recheck (small instances)
    long long evaluations = 0;
    std::optional<std::uint64_t> seed;      // Random only
    std::optional<std::string> rng;         // Random only, e.g. "mt19937_64-rejection"
    std::vector<double> cbc_stage_e2;       // Cbc only: best e^2 after each stage
};

/// All (n-1)^d candidates; ties broken by lexicographically smallest z.
SearchResult exhaustive_search(long long n, int d, const Weights& w);

/// `trials` candidates drawn uniformly from {1,...,n-1}^d by a seeded
/// mt19937_64 with rejection sampling; one sequential draw stream, so the
/// candidate list depends only on (seed, trials, n, d).
SearchResult random_search(long long n, int d, const Weights& w, long long trials, std::uint64_t seed);

/// Greedy: coordinate s minimizes the s-dimensional error with weights
/// restricted to {1,...,s}; ties take the smallest component.
SearchResult cbc_search(long long n, int d, const Weights& w);

} // namespace latwce
