#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latinrect/common.hpp"
#include "latinrect/profile_space.hpp"

namespace latinrect {

/// sum_i coefficient_i * s_{symbol_i} + constant, over the class-count symbols.
struct AffineForm {
    struct Term {
        std::int64_t coefficient;
        ClassIndex symbol;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;
    std::int64_t constant = 0;

    std::int64_t evaluate(std::span<const std::int64_t> values) const;
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// g(arguments...)^{s_exponent}
struct PowerFactor {
    ClassIndex exponent;
    std::vector<AffineForm> arguments;  // one per class, in class-index order
    friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

/// f_B(t) = sum of the listed t-parameters.
struct BlockSum {
    std::uint32_t block;  // bit i-1 <-> row i
    std::vector<ClassIndex> parameters;
    friend bool operator==(const BlockSum&, const BlockSum&) = default;
};

/// coefficient * prod f_B over the blocks of one partition.
struct GTerm {
    BigInt coefficient;
    std::vector<std::uint32_t> blocks;
    friend bool operator==(const GTerm&, const GTerm&) = default;
};

/// Symbolic R_k(n):
///   sum over s_v (v in {0,1}^(k-1)) with sum s_v = n of
///   (-1)^{sign_exponent} multinomial(n; s_v...) prod_v g(shifted s)^{s_v},
/// with g expanded over the partitions of {1..k-1}.
struct Expression {
    unsigned k = 0;
    unsigned m = 0;
    std::vector<std::string> summation_indices;  // "s" + class bit string
    AffineForm sign_exponent;
    std::vector<ClassIndex> multinomial_parts;
    std::vector<PowerFactor> factors;
    std::vector<GTerm> g_expansion;       // finest partition first
    std::vector<BlockSum> block_sums;     // by block size, then lexicographic
};

enum class RenderFormat { text, latex };
RenderFormat parse_render_format(std::string_view name);

constexpr unsigned kDefaultExpressionMaxK = 8;

/// Throws std::invalid_argument for k < 2 (R_1(n) = 1 has nothing to print) or k > max_k.
Expression generate_expression(unsigned k, unsigned max_k = kDefaultExpressionMaxK);

std::string render(const Expression& e, RenderFormat format);

/// Evaluates the expression tree at n; guarded by the same term ceiling as the enumerator.
BigInt evaluate_expression(const Expression& e, unsigned n, std::uint64_t max_terms);
BigInt evaluate_expression(const Expression& e, unsigned n);

}  // namespace latinrect
