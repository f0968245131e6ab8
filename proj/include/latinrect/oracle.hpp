#pragma once

#include <set>
#include <utility>
#include <vector>

#include "latinrect/common.hpp"
#include "latinrect/profile_space.hpp"

namespace latinrect {

/// k x n matrix with entries in 1..n. Rows and columns are 1-based in accessors.
class Rectangle {
public:
    /// Throws std::invalid_argument if rows are ragged or an entry is outside 1..n.
    explicit Rectangle(std::vector<std::vector<unsigned>> rows);

    unsigned k() const noexcept { return static_cast<unsigned>(rows_.size()); }
    unsigned n() const noexcept { return rows_.empty() ? 0 : static_cast<unsigned>(rows_.front().size()); }
    unsigned at(unsigned row, unsigned column) const { return rows_.at(row - 1).at(column - 1); }
    const std::vector<std::vector<unsigned>>& rows() const noexcept { return rows_; }

    friend bool operator==(const Rectangle&, const Rectangle&) = default;

private:
    std::vector<std::vector<unsigned>> rows_;
};

bool is_latin(const Rectangle& r);

/// Permutes columns so the first row reads 1..n. Throws std::invalid_argument for non-Latin input.
Rectangle reduce(const Rectangle& r);

/// The 0-1 tensor S[i][j][l] = 1 iff entry (i, j) is l, viewed as rooms of a
/// hotel: a shaft fixes (row, column), a hall fixes (row, floor) and a
/// corridor fixes (column, floor).
class IncidenceTensor {
public:
    explicit IncidenceTensor(const Rectangle& r) : rect_(r) {}

    int at(unsigned row, unsigned column, unsigned floor) const { return rect_.at(row, column) == floor ? 1 : 0; }
    unsigned shaft_sum(unsigned row, unsigned column) const;
    unsigned hall_sum(unsigned row, unsigned floor) const;
    unsigned corridor_sum(unsigned column, unsigned floor) const;

private:
    const Rectangle& rect_;
};

struct Hall {
    unsigned row;    // 2..k; the back row never has omitted halls
    unsigned floor;  // 1..n
    friend auto operator<=>(const Hall&, const Hall&) = default;
};

using HallSet = std::set<Hall>;

/// All 2^((k-1) n) hall sets for a k x n hotel, in binary counting order.
std::vector<HallSet> all_hall_sets(unsigned k, unsigned n);

/// Feasibility ceilings for the brute-force searches.
struct OracleLimits {
    unsigned max_k = 4;
    unsigned max_n = 7;
    unsigned lonely_max_k = 3;
    unsigned lonely_max_n = 6;
};

/// Counts Latin rectangles by column-wise backtracking. The reduced variant
/// fixes the first row at 1..n; the total variant returns n! times that count.
BigInt brute_force_count(unsigned k, unsigned n, Variant variant, const OracleLimits& limits = {});

/// Counts reduced lonely-hall configurations (first row 1..n, no repeated
/// symbol within a column, rows may repeat symbols) whose rows 2..k never
/// use a floor l with (row, l) in `omitted`.
BigInt lonely_hall_count(unsigned k, unsigned n, const HallSet& omitted, const OracleLimits& limits = {});

/// Tallies floors by which of their halls (rows 2..k) are omitted.
Profile profile_of(const HallSet& omitted, unsigned k, unsigned n);

}  // namespace latinrect
