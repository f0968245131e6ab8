#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latinrect/common.hpp"

namespace latinrect {

/// A set partition of {1..m}, stored as its restricted growth string.
///
/// rgs[i] is the block label of element i+1; labels appear in order of first
/// occurrence, so every partition has exactly one representation. Blocks are
/// exposed as bitmasks (element i -> bit i-1) and as 1-based element lists.
class SetPartition {
public:
    /// The empty partition of the empty set.
    SetPartition() = default;

    /// Throws std::invalid_argument unless `rgs` is a canonical restricted growth string.
    explicit SetPartition(std::vector<unsigned> rgs);

    unsigned ground_size() const noexcept { return static_cast<unsigned>(rgs_.size()); }
    std::span<const unsigned> rgs() const noexcept { return rgs_; }
    std::size_t block_count() const noexcept { return masks_.size(); }
    std::span<const std::uint32_t> block_masks() const noexcept { return masks_; }
    std::vector<std::vector<unsigned>> blocks() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    std::vector<unsigned> rgs_;
    std::vector<std::uint32_t> masks_;
};

/// All partitions of {1..m}, lexicographic on the restricted growth string.
std::vector<SetPartition> partitions_of(unsigned m);

/// Shared, lazily built copy of partitions_of(m). Safe to call concurrently.
const std::vector<SetPartition>& cached_partitions(unsigned m);

/// Product over blocks B of (-1)^(|B|-1) (|B|-1)!: the Möbius value from the
/// all-singletons partition up to p.
BigInt mobius_coefficient(const SetPartition& p);

/// Bell numbers via the Bell triangle.
BigInt bell_number(unsigned m);

}  // namespace latinrect
