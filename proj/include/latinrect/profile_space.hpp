#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latinrect/common.hpp"

namespace latinrect {

using ClassIndex = std::uint32_t;

/// Classification of one floor by which of its m halls are omitted.
///
/// Bit i-1 of the index is set iff the hall in row i of the m rows under
/// inclusion-exclusion is omitted. For Latin rectangles the rows under
/// inclusion-exclusion are rectangle rows 2..k, so rectangle row 2 is the
/// lowest bit. Printed as a bit string with row 1 of the m rows first
/// ("011" is index 6 for m = 3).
class ClassVector {
public:
    ClassVector(unsigned m, ClassIndex index);

    static ClassVector all_ones(unsigned m) { return {m, (ClassIndex{1} << m) - 1}; }
    static ClassVector all_zeros(unsigned m) { return {m, 0}; }

    unsigned m() const noexcept { return m_; }
    ClassIndex index() const noexcept { return index_; }
    bool bit(unsigned row) const;  // row in 1..m
    unsigned weight() const noexcept;
    bool is_all_ones() const noexcept { return index_ == (ClassIndex{1} << m_) - 1; }
    std::string to_string() const;

    friend bool operator==(const ClassVector&, const ClassVector&) = default;

private:
    unsigned m_;
    ClassIndex index_;
};

/// A tally of floors per class vector, indexed by ClassIndex.
///
/// Profiles produced by compositions() are nonnegative. Intermediate profiles
/// handed to g() may hold arbitrary integers.
class Profile {
public:
    Profile(unsigned m, std::vector<std::int64_t> counts);

    /// All n floors in the all-zeros class.
    static Profile concentrated(unsigned m, std::int64_t n);

    unsigned m() const noexcept { return m_; }
    std::size_t class_count() const noexcept { return counts_.size(); }
    std::int64_t total() const noexcept;
    bool nonnegative() const noexcept;

    std::int64_t operator[](ClassIndex v) const { return counts_[v]; }
    std::int64_t& operator[](ClassIndex v) { return counts_[v]; }
    std::span<const std::int64_t> counts() const noexcept { return counts_; }

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    unsigned m_;
    std::vector<std::int64_t> counts_;
};

/// In-place colexicographic walk over all profiles with 2^m classes summing to n.
///
/// Starts at (n, 0, ..., 0). Each step moves the leading nonzero part: the
/// part at the first nonzero index i is reset, one unit goes to index i+1 and
/// the rest returns to index 0. Amortized O(1) per step.
class CompositionCursor {
public:
    CompositionCursor(unsigned n, unsigned m);

    const Profile& current() const noexcept { return current_; }
    /// Advances; returns false once the sequence is exhausted.
    bool next();

private:
    Profile current_;
};

std::vector<Profile> compositions(unsigned n, unsigned m);

/// C(n + 2^m - 1, 2^m - 1).
BigInt composition_count(unsigned n, unsigned m);

class FactorialTable {
public:
    explicit FactorialTable(unsigned n);
    const BigInt& operator[](std::size_t i) const { return table_.at(i); }
    unsigned limit() const noexcept { return static_cast<unsigned>(table_.size() - 1); }

private:
    std::vector<BigInt> table_;
};

BigInt multinomial(const Profile& p);
BigInt multinomial(const Profile& p, const FactorialTable& table);

/// (-1)^(sum_v weight(v) counts[v]), i.e. (-1)^|S| for any hall set S with profile p.
int sign(const Profile& p);

}  // namespace latinrect
