#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latinrect/arith.hpp"
#include "latinrect/partition_lattice.hpp"
#include "latinrect/profile_space.hpp"

namespace latinrect {

/// f_A(t): total of t_v over class vectors v with no omitted hall in any row of A.
/// `block_mask` has bit i-1 set for row i; it must be nonempty and within the m rows.
BigInt f_block(const Profile& t, std::uint32_t block_mask);
BigInt f_block(const Profile& t, std::span<const unsigned> rows);

/// g(t) = sum over partitions p of {1..m} of mu(p) * prod_{B in p} f_B(t).
///
/// For nonnegative t this counts m-tuples of pairwise distinct floors where
/// coordinate i avoids floors whose class has bit i set. Negative entries
/// are accepted (the direct total-count formulas feed signed arguments).
BigInt g(const Profile& t);

/// Move one floor from class v to the all-ones class; identity when v is all-ones.
/// Throws std::domain_error when class v is empty and not all-ones.
Profile shift_profile(const Profile& s, ClassIndex v);

/// Number of reduced lonely-hall configurations omitting a hall set with profile s:
/// the product over nonempty classes v of g(shift_profile(s, v))^s_v.
BigInt G(const Profile& s);

namespace detail {

/// mu(p) together with the block masks of p, for every partition of {1..m}.
struct MobiusTerm {
    BigInt coefficient;
    std::vector<std::uint32_t> blocks;
};

const std::vector<MobiusTerm>& mobius_expansion(unsigned m);

template <class Arith>
BigInt f_block_with(Arith& ar, const Profile& t, std::uint32_t block_mask)
{
    const std::uint32_t full = (std::uint32_t{1} << t.m()) - 1;
    const std::uint32_t free = full & ~block_mask;
    // walk every submask of `free`, including 0
    std::uint32_t v = free;
    BigInt sum = t[v];
    while (v != 0) {
        v = (v - 1) & free;
        sum = ar.add(sum, BigInt(t[v]));
    }
    return sum;
}

template <class Arith>
BigInt g_with(Arith& ar, const Profile& t)
{
    const auto& expansion = mobius_expansion(t.m());
    std::vector<std::optional<BigInt>> f(std::size_t{1} << t.m());
    std::optional<BigInt> acc;
    for (const auto& term : expansion) {
        BigInt product = 1;
        bool first = true;
        for (std::uint32_t block : term.blocks) {
            auto& slot = f[block];
            if (!slot) slot = f_block_with(ar, t, block);
            product = first ? *slot : ar.mul(product, *slot);
            first = false;
        }
        const bool negative = term.coefficient < 0;
        if (term.coefficient != 1 && term.coefficient != -1)
            product = ar.mul(negative ? BigInt(-term.coefficient) : term.coefficient, product);
        if (!acc)
            acc = negative ? BigInt(-product) : product;
        else
            acc = negative ? ar.sub(*acc, product) : ar.add(*acc, product);
    }
    return *acc;
}

/// G(s) with the per-evaluation g values computed once per nonempty class.
/// `g_fault` is added to every g value; nonzero only under fault injection.
template <class Arith>
BigInt G_with(Arith& ar, const Profile& s, std::int64_t g_fault = 0)
{
    const ClassIndex ones = static_cast<ClassIndex>(s.class_count() - 1);
    std::optional<BigInt> product;
    Profile shifted = s;
    for (ClassIndex v = 0; v < s.class_count(); ++v) {
        const std::int64_t exponent = s[v];
        if (exponent == 0) continue;
        if (v != ones) {
            shifted[v] -= 1;
            shifted[ones] += 1;
            ar.note_adds(2);
        }
        BigInt gv = g_with(ar, shifted);
        if (g_fault != 0) gv += g_fault;
        if (v != ones) {
            shifted[v] += 1;
            shifted[ones] -= 1;
        }
        BigInt power = ar.pow(gv, static_cast<std::uint64_t>(exponent));
        product = product ? ar.mul(*product, power) : std::move(power);
    }
    return product ? *product : BigInt(1);
}

}  // namespace detail

}  // namespace latinrect
