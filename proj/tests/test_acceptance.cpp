// tests/test_acceptance.cpp — the acceptance gate. Runs every check of the
// verification suite on its full grids (not --quick) and prints exactly one
// PASS/FAIL line per criterion. Criterion 12 (byte-identical reports across
// worker counts) is additionally exercised end to end by invoking the real
// executable (path in LATWCE_CLI) twice and comparing bytes.

#include "latwce/suite.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int spawn(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

/// End-to-end leg of the determinism criterion: run `suite --quick` through
/// the installed executable with two worker counts and compare raw bytes.
latwce::CheckResult cli_byte_identity() {
    const char* cli = std::getenv("LATWCE_CLI");
    if (!cli) return {false, "LATWCE_CLI is not set; cannot invoke the executable"};
    std::string quoted = std::string("\"") + cli + "\"";
    int e1 = spawn(quoted + " suite --quick --threads 1 > acc_suite_1.json 2>/dev/null");
    int e4 = spawn(quoted + " suite --quick --threads 4 > acc_suite_4.json 2>/dev/null");
    std::string r1 = slurp("acc_suite_1.json");
    std::string r4 = slurp("acc_suite_4.json");
    std::remove("acc_suite_1.json");
    std::remove("acc_suite_4.json");
    if (e1 != 0 || e4 != 0)
        return {false, "suite --quick exited " + std::to_string(e1) + " and " + std::to_string(e4)};
    if (r1.empty() || r1 != r4)
        return {false, "reports differ between --threads 1 and --threads 4"};
    return {true, "suite --quick reports are byte-identical for --threads 1 and --threads 4 (" +
                      std::to_string(r1.size()) + " bytes)"};
}

} // namespace

int main() {
    const std::vector<latwce::SuiteCheck>& checks = latwce::suite_checks();
    if (checks.size() != 12) {
        std::printf("expected 12 registered checks, found %zu\n", checks.size());
        return 2;
    }

    int passed = 0;
    for (const latwce::SuiteCheck& check : checks) {
        latwce::CheckResult result;
        try {
            result = check.run(/*quick=*/false);
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        if (check.id == 12 && result.pass) {
            latwce::CheckResult cli = cli_byte_identity();
            result.pass = cli.pass;
            result.detail += "; " + cli.detail;
        }
        std::printf("[%2d/12] %s  %-24s %s\n", check.id, result.pass ? "PASS" : "FAIL", check.name.c_str(),
                    result.detail.c_str());
        std::fflush(stdout);
        if (result.pass) ++passed;
    }

    std::printf("acceptance: %d/12 criteria passed\n", passed);
    return passed == 12 ? 0 : 2;
}
