#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace latinrect {

struct SelftestConfig {
    unsigned max_k = 4;
    unsigned max_n = 6;
    std::int64_t g_fault = 0;  // fault injection: added to every g value
    unsigned threads = 1;
};

struct SuiteOutcome {
    std::string name;
    unsigned passed = 0;
    unsigned total = 0;
    std::optional<std::string> counterexample;  // first mismatch, in suite order
    std::vector<std::string> notes;
};

/// Cross-checks the formulas against the brute-force oracle: formula-vs-oracle,
/// G-vs-lonely-hall, ryser-bullets, bracket-variant and zero-rule suites.
std::vector<SuiteOutcome> run_selftest(const SelftestConfig& config);

void print_selftest(std::ostream& out, const std::vector<SuiteOutcome>& suites);

}  // namespace latinrect
