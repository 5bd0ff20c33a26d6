// include/latwce/suite.hpp — the verification suite: a fixed registry of
// numbered checks covering the exact-value oracles, the cross-method
// equivalences, the T_n sweeps, the bound chain and the determinism probe.
// Check outcomes carry deterministic detail strings (never wall times), so a
// serialized report is byte-identical across runs and worker counts.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace latwce {

struct CheckResult {
    bool pass = false;
    std::string detail; // deterministic summary: grid sizes, extreme values
};

struct SuiteCheck {
    int id = 0;              // stable 1-based id
    std::string name;        // kebab-case, stable
    std::string description; // one line, what is being verified
    std::function<CheckResult(bool quick)> run;
};

/// The fixed registry, ids 1..12, in execution order.
const std::vector<SuiteCheck>& suite_checks();

struct SuiteCheckOutcome {
    int id = 0;
    std::string name;
    std::string description;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    bool quick = false;
    bool all_pass = false;
    std::vector<SuiteCheckOutcome> checks;
};

/// Runs every check. `quick` shrinks sweeps to n <= 101 grids. The observer
/// (may be null) is called after each check with its outcome and wall time;
/// wall times exist only there, never in the report.
SuiteReport run_suite(bool quick,
                      const std::function<void(const SuiteCheckOutcome&, double ms)>& observer = nullptr);

} // namespace latwce
