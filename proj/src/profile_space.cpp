#include "latinrect/profile_space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace latinrect {

namespace {

constexpr unsigned kMaxRows = 20;

void check_rows(unsigned m)
{
    if (m > kMaxRows) throw std::invalid_argument("too many rows for a class profile");
}

}  // namespace

ClassVector::ClassVector(unsigned m, ClassIndex index) : m_(m), index_(index)
{
    check_rows(m);
    if (index >> m != 0) throw std::invalid_argument("class index out of range");
}

bool ClassVector::bit(unsigned row) const
{
    if (row < 1 || row > m_) throw std::out_of_range("class vector row out of range");
    return (index_ >> (row - 1)) & 1u;
}

unsigned ClassVector::weight() const noexcept
{
    return static_cast<unsigned>(std::popcount(index_));
}

std::string ClassVector::to_string() const
{
    std::string s(m_, '0');
    for (unsigned i = 0; i < m_; ++i)
        if ((index_ >> i) & 1u) s[i] = '1';
    return s;
}

Profile::Profile(unsigned m, std::vector<std::int64_t> counts) : m_(m), counts_(std::move(counts))
{
    check_rows(m);
    if (counts_.size() != (std::size_t{1} << m))
        throw std::invalid_argument("profile must have 2^m class counts");
}

Profile Profile::concentrated(unsigned m, std::int64_t n)
{
    check_rows(m);
    std::vector<std::int64_t> counts(std::size_t{1} << m, 0);
    counts[0] = n;
    return {m, std::move(counts)};
}

std::int64_t Profile::total() const noexcept
{
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

bool Profile::nonnegative() const noexcept
{
    return std::all_of(counts_.begin(), counts_.end(), [](std::int64_t c) { return c >= 0; });
}

CompositionCursor::CompositionCursor(unsigned n, unsigned m) : current_(Profile::concentrated(m, n)) {}

bool CompositionCursor::next()
{
    const std::size_t parts = current_.class_count();
    std::size_t i = 0;
    while (i < parts && current_[static_cast<ClassIndex>(i)] == 0) ++i;
    if (i + 1 >= parts) return false;
    const std::int64_t v = current_[static_cast<ClassIndex>(i)];
    current_[static_cast<ClassIndex>(i)] = 0;
    current_[0] = v - 1;
    current_[static_cast<ClassIndex>(i + 1)] += 1;
    return true;
}

std::vector<Profile> compositions(unsigned n, unsigned m)
{
    std::vector<Profile> out;
    CompositionCursor cursor(n, m);
    do {
        out.push_back(cursor.current());
    } while (cursor.next());
    return out;
}

BigInt composition_count(unsigned n, unsigned m)
{
    check_rows(m);
    const unsigned bars = (1u << m) - 1;
    return binomial(n + bars, bars);
}

FactorialTable::FactorialTable(unsigned n)
{
    table_.reserve(n + 1);
    table_.emplace_back(1);
    for (unsigned i = 1; i <= n; ++i) table_.push_back(table_.back() * i);
}

BigInt multinomial(const Profile& p)
{
    return multinomial(p, FactorialTable(static_cast<unsigned>(std::max<std::int64_t>(p.total(), 0))));
}

BigInt multinomial(const Profile& p, const FactorialTable& table)
{
    if (!p.nonnegative()) throw std::invalid_argument("multinomial of a profile with negative entries");
    BigInt denominator = 1;
    for (std::int64_t c : p.counts()) denominator *= table[static_cast<std::size_t>(c)];
    return table[static_cast<std::size_t>(p.total())] / denominator;
}

int sign(const Profile& p)
{
    std::int64_t parity = 0;
    for (std::size_t v = 0; v < p.class_count(); ++v)
        parity += std::popcount(static_cast<ClassIndex>(v)) * p[static_cast<ClassIndex>(v)];
    return (parity % 2 == 0) ? 1 : -1;
}

}  // namespace latinrect
