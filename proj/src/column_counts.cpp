#include "latinrect/column_counts.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace latinrect {

namespace detail {

const std::vector<MobiusTerm>& mobius_expansion(unsigned m)
{
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const std::vector<MobiusTerm>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[m];
    if (!slot) {
        auto terms = std::make_unique<std::vector<MobiusTerm>>();
        for (const auto& p : partitions_of(m)) {
            auto masks = p.block_masks();
            terms->push_back({mobius_coefficient(p), {masks.begin(), masks.end()}});
        }
        slot = std::move(terms);
    }
    return *slot;
}

}  // namespace detail

BigInt f_block(const Profile& t, std::uint32_t block_mask)
{
    const std::uint32_t full = (std::uint32_t{1} << t.m()) - 1;
    if (block_mask == 0 || (block_mask & ~full) != 0)
        throw std::invalid_argument("block must be a nonempty subset of the rows");
    PlainArith ar;
    return detail::f_block_with(ar, t, block_mask);
}

BigInt f_block(const Profile& t, std::span<const unsigned> rows)
{
    std::uint32_t mask = 0;
    for (unsigned r : rows) {
        if (r < 1 || r > t.m()) throw std::invalid_argument("block row out of range");
        mask |= std::uint32_t{1} << (r - 1);
    }
    return f_block(t, mask);
}

BigInt g(const Profile& t)
{
    PlainArith ar;
    return detail::g_with(ar, t);
}

Profile shift_profile(const Profile& s, ClassIndex v)
{
    const ClassIndex ones = static_cast<ClassIndex>(s.class_count() - 1);
    if (v > ones) throw std::invalid_argument("class index out of range");
    if (v == ones) return s;
    if (s[v] < 1) throw std::domain_error("cannot shift a floor out of an empty class");
    Profile t = s;
    t[v] -= 1;
    t[ones] += 1;
    return t;
}

BigInt G(const Profile& s)
{
    if (!s.nonnegative()) throw std::invalid_argument("G needs a nonnegative profile");
    PlainArith ar;
    return detail::G_with(ar, s);
}

}  // namespace latinrect
