#pragma once

#include <cstdint>
#include <string_view>

#include "latinrect/arith.hpp"
#include "latinrect/common.hpp"

namespace latinrect {

enum class Method { formula, oracle, factorial_bridge, direct_l };
std::string_view to_string(Method m);
Method parse_method(std::string_view name);

/// Bracket used by the direct two-row total count: the partition-lattice
/// bracket (..., - s00) or the alternative printed form (..., - s11).
enum class BracketVariant { derived, literal };
std::string_view to_string(BracketVariant b);
BracketVariant parse_bracket(std::string_view name);

/// Default ceiling on the number of summation terms: 10^8, or the value of
/// the LATINRECT_MAX_TERMS environment variable when it is set.
std::uint64_t default_max_terms();

struct EvalOptions {
    unsigned threads = 1;  // 0 = hardware concurrency
    std::uint64_t max_terms = default_max_terms();
    bool instrument = false;
    std::int64_t g_fault = 0;  // test hook: added to every g value
};

struct CountStats {
    BigInt term_count = 0;  // summation terms actually evaluated
    OpTally ops;
    double elapsed_ms = 0.0;
};

struct CountResult {
    unsigned k = 0;
    unsigned n = 0;
    Variant variant = Variant::reduced;
    Method method = Method::formula;
    BigInt value = 0;
    CountStats stats;
    bool extrapolated = false;  // direct total count beyond the three-row printed cases
};

/// R_k(n): sum over profiles s on {0,1}^(k-1) of sign(s) multinomial(s) G(s).
CountResult reduced_count(unsigned k, unsigned n, const EvalOptions& opts = {});

/// L_k(n) = n! R_k(n).
CountResult total_count(unsigned k, unsigned n, const EvalOptions& opts = {});

/// L_k(n) by inclusion-exclusion over all (non-reduced) lonely-hall
/// configurations: sum over profiles s on {0,1}^k of sign(s) multinomial(s) g(s)^n.
/// The bracket choice only matters for k = 2.
CountResult total_count_direct(unsigned k, unsigned n, BracketVariant bracket = BracketVariant::derived,
                               const EvalOptions& opts = {});

/// n! sum_r (-1)^r / r!, in integers.
BigInt derangements_classical(unsigned n);

/// sum_r (-1)^r C(n,r) (n-r)^r (n-r-1)^(n-r), with 0^0 = 1.
BigInt derangements_ryser(unsigned n);

}  // namespace latinrect
