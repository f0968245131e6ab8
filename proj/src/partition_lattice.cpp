#include "latinrect/partition_lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>

namespace latinrect {

namespace {

constexpr unsigned kMaxGround = 31;

}  // namespace

SetPartition::SetPartition(std::vector<unsigned> rgs) : rgs_(std::move(rgs))
{
    if (rgs_.size() > kMaxGround) throw std::invalid_argument("set partition ground set too large");
    unsigned next_label = 0;
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
        if (rgs_[i] > next_label) throw std::invalid_argument("not a restricted growth string");
        if (rgs_[i] == next_label) {
            ++next_label;
            masks_.push_back(0);
        }
        masks_[rgs_[i]] |= std::uint32_t{1} << i;
    }
}

std::vector<std::vector<unsigned>> SetPartition::blocks() const
{
    std::vector<std::vector<unsigned>> out(masks_.size());
    for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(static_cast<unsigned>(i + 1));
    return out;
}

std::vector<SetPartition> partitions_of(unsigned m)
{
    if (m > kMaxGround) throw std::invalid_argument("set partition ground set too large");
    std::vector<SetPartition> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }

    // prefix_max[i] = max(rgs[0..i]); rgs[i] may range up to prefix_max[i-1] + 1
    std::vector<unsigned> rgs(m, 0);
    std::vector<unsigned> prefix_max(m, 0);
    for (;;) {
        out.emplace_back(rgs);
        std::size_t i = m - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < m; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return out;
}

const std::vector<SetPartition>& cached_partitions(unsigned m)
{
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const std::vector<SetPartition>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<const std::vector<SetPartition>>(partitions_of(m));
    return *slot;
}

BigInt mobius_coefficient(const SetPartition& p)
{
    BigInt c = 1;
    for (std::uint32_t mask : p.block_masks()) {
        const unsigned size = static_cast<unsigned>(std::popcount(mask));
        c *= factorial(size - 1);
        if (size % 2 == 0) c = -c;
    }
    return c;
}

BigInt bell_number(unsigned m)
{
    // row r of the triangle starts with the last entry of row r-1; B(r) is its first entry
    std::vector<BigInt> row{1};
    for (unsigned r = 0; r < m; ++r) {
        std::vector<BigInt> next{row.back()};
        next.reserve(row.size() + 1);
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace latinrect
