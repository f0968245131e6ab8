#pragma once

#include <bit>
#include <cstdint>

#include "latinrect/common.hpp"

namespace latinrect {

/// Operation tallies for one evaluation. Every addition, subtraction,
/// multiplication or division counts as one operation regardless of operand
/// size; small-integer index arithmetic inside the formula (the shifted
/// arguments of g) is counted as additions too.
struct OpTally {
    std::uint64_t adds = 0;
    std::uint64_t mults = 0;
    std::uint64_t power_mults_actual = 0;  // share of `mults` spent inside pow()
    std::uint64_t power_mults_naive = 0;   // cost of the same powers by repeated multiplication

    /// Multiplications if every power g^s were computed with s - 1 products.
    std::uint64_t mults_paper_model() const noexcept { return mults - power_mults_actual + power_mults_naive; }

    OpTally& operator+=(const OpTally& o) noexcept
    {
        adds += o.adds;
        mults += o.mults;
        power_mults_actual += o.power_mults_actual;
        power_mults_naive += o.power_mults_naive;
        return *this;
    }

    friend bool operator==(const OpTally&, const OpTally&) = default;
};

/// Exact arithmetic without bookkeeping.
class PlainArith {
public:
    BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
    BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
    BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
    BigInt div(const BigInt& a, const BigInt& b) { return a / b; }
    BigInt pow(const BigInt& base, std::uint64_t e) { return boost::multiprecision::pow(base, static_cast<unsigned>(e)); }
    void note_adds(std::uint64_t) {}
};

/// Same interface as PlainArith, counting every operation it performs.
class CountingArith {
public:
    BigInt add(const BigInt& a, const BigInt& b)
    {
        ++tally_.adds;
        return a + b;
    }
    BigInt sub(const BigInt& a, const BigInt& b)
    {
        ++tally_.adds;
        return a - b;
    }
    BigInt mul(const BigInt& a, const BigInt& b)
    {
        ++tally_.mults;
        return a * b;
    }
    BigInt div(const BigInt& a, const BigInt& b)
    {
        ++tally_.mults;
        return a / b;
    }

    /// Left-to-right square-and-multiply; the leading 1 bit costs nothing.
    BigInt pow(const BigInt& base, std::uint64_t e)
    {
        if (e == 0) return 1;
        tally_.power_mults_naive += e - 1;
        BigInt r = base;
        for (int bit = std::bit_width(e) - 2; bit >= 0; --bit) {
            r = mul(r, r);
            ++tally_.power_mults_actual;
            if ((e >> bit) & 1u) {
                r = mul(r, base);
                ++tally_.power_mults_actual;
            }
        }
        return r;
    }

    void note_adds(std::uint64_t count) { tally_.adds += count; }

    const OpTally& tally() const noexcept { return tally_; }

private:
    OpTally tally_;
};

}  // namespace latinrect
