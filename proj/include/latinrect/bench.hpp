#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "latinrect/common.hpp"

namespace latinrect {

enum class CostMode { actual, paper_model };

/// Operation counts for one evaluation of R_k(n), single-threaded.
struct CostReport {
    unsigned k = 0;
    unsigned n = 0;
    BigInt term_count = 0;
    std::uint64_t adds = 0;
    std::uint64_t mults_actual = 0;       // binary powering
    std::uint64_t mults_paper_model = 0;  // every g^s as s - 1 products
    double elapsed_ms = 0.0;
    BigInt value = 0;

    std::uint64_t total_ops(CostMode mode) const
    {
        return adds + (mode == CostMode::actual ? mults_actual : mults_paper_model);
    }
};

struct SweepResult {
    std::vector<CostReport> reports;
    // least-squares slopes of log(y) against log(n); absent with fewer than two distinct n
    std::optional<double> terms_exponent;
    std::optional<double> actual_exponent;
    std::optional<double> paper_model_exponent;
};

CostReport measure(unsigned k, unsigned n, std::uint64_t max_terms);

SweepResult sweep(unsigned k, unsigned n_min, unsigned n_max, unsigned step, std::uint64_t max_terms);

/// Ordinary least squares slope of ln(y) on ln(x).
std::optional<double> fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// CSV with header k,n,terms,adds,mults_actual,mults_paper_model,elapsed_ms and
/// `# key=value` footer lines carrying the fitted exponents.
void write_csv(std::ostream& out, unsigned k, const SweepResult& sweep);

/// One JSON object per report, then one summary object.
void write_json_lines(std::ostream& out, unsigned k, const SweepResult& sweep);

}  // namespace latinrect
