#include "latinrect/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace latinrect {

namespace {

using Mask = std::uint32_t;
constexpr unsigned kMaxSymbols = 31;

void guard(unsigned k, unsigned n, unsigned max_k, unsigned max_n, const char* what)
{
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (n > kMaxSymbols) throw std::invalid_argument("n is too large for the brute-force oracle");
    if (k > max_k || n > max_n) {
        throw ResourceGuardError(std::string(what) + " refuses k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                                     " (limits k<=" + std::to_string(max_k) + ", n<=" + std::to_string(max_n) + ")",
                                 BigInt(0));
    }
}

/// Column-major backtracking over cells (row 2..k, column 1..n).
/// `row_allowed[i]` restricts the symbols row i may use at all; `row_unique`
/// enforces no repeat within a row (Latin) or not (lonely-hall).
class Search {
public:
    Search(unsigned k, unsigned n, bool row_unique, std::vector<Mask> row_allowed)
        : k_(k), n_(n), row_unique_(row_unique), row_allowed_(std::move(row_allowed)), row_used_(k, 0)
    {
    }

    std::uint64_t run()
    {
        if (n_ == 0 || k_ == 1) return 1;
        count_ = 0;
        column_used_ = Mask{1} << 1;
        descend(1, 2);
        return count_;
    }

private:
    void descend(unsigned column, unsigned row)
    {
        if (row > k_) {
            if (column == n_) {
                ++count_;
                return;
            }
            const Mask saved = column_used_;
            column_used_ = Mask{1} << (column + 1);  // first-row symbol of the next column
            descend(column + 1, 2);
            column_used_ = saved;
            return;
        }
        Mask blocked = column_used_ | ~row_allowed_[row - 1];
        if (row_unique_) blocked |= row_used_[row - 1];
        for (unsigned l = 1; l <= n_; ++l) {
            const Mask bit = Mask{1} << l;
            if (blocked & bit) continue;
            column_used_ |= bit;
            row_used_[row - 1] |= bit;
            descend(column, row + 1);
            column_used_ &= ~bit;
            row_used_[row - 1] &= ~bit;
        }
    }

    unsigned k_;
    unsigned n_;
    bool row_unique_;
    std::vector<Mask> row_allowed_;
    std::vector<Mask> row_used_;
    Mask column_used_ = 0;
    std::uint64_t count_ = 0;
};

Mask all_symbols(unsigned n)
{
    return ((Mask{1} << n) - 1) << 1;
}

}  // namespace

Rectangle::Rectangle(std::vector<std::vector<unsigned>> rows) : rows_(std::move(rows))
{
    const std::size_t n = rows_.empty() ? 0 : rows_.front().size();
    for (const auto& row : rows_) {
        if (row.size() != n) throw std::invalid_argument("rectangle rows have different lengths");
        for (unsigned x : row)
            if (x < 1 || x > n) throw std::invalid_argument("rectangle entry outside 1..n");
    }
}

bool is_latin(const Rectangle& r)
{
    const unsigned n = r.n();
    for (const auto& row : r.rows()) {
        std::vector<bool> seen(n + 1, false);
        for (unsigned x : row) {
            if (seen[x]) return false;
            seen[x] = true;
        }
    }
    for (unsigned j = 1; j <= n; ++j) {
        std::vector<bool> seen(n + 1, false);
        for (unsigned i = 1; i <= r.k(); ++i) {
            const unsigned x = r.at(i, j);
            if (seen[x]) return false;
            seen[x] = true;
        }
    }
    return true;
}

Rectangle reduce(const Rectangle& r)
{
    if (!is_latin(r)) throw std::invalid_argument("only Latin rectangles can be reduced");
    if (r.k() == 0) return r;
    auto rows = r.rows();
    for (unsigned j = 1; j <= r.n(); ++j) {
        const unsigned target = r.at(1, j);
        for (unsigned i = 1; i <= r.k(); ++i) rows[i - 1][target - 1] = r.at(i, j);
    }
    return Rectangle(std::move(rows));
}

unsigned IncidenceTensor::shaft_sum(unsigned row, unsigned column) const
{
    unsigned s = 0;
    for (unsigned l = 1; l <= rect_.n(); ++l) s += at(row, column, l);
    return s;
}

unsigned IncidenceTensor::hall_sum(unsigned row, unsigned floor) const
{
    unsigned s = 0;
    for (unsigned j = 1; j <= rect_.n(); ++j) s += at(row, j, floor);
    return s;
}

unsigned IncidenceTensor::corridor_sum(unsigned column, unsigned floor) const
{
    unsigned s = 0;
    for (unsigned i = 1; i <= rect_.k(); ++i) s += at(i, column, floor);
    return s;
}

std::vector<HallSet> all_hall_sets(unsigned k, unsigned n)
{
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    const unsigned halls = (k - 1) * n;
    if (halls > 24) throw std::invalid_argument("too many halls to enumerate every hall set");
    std::vector<HallSet> out;
    out.reserve(std::size_t{1} << halls);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << halls); ++bits) {
        HallSet s;
        for (unsigned h = 0; h < halls; ++h)
            if ((bits >> h) & 1u) s.insert({2 + h / n, 1 + h % n});
        out.push_back(std::move(s));
    }
    return out;
}

BigInt brute_force_count(unsigned k, unsigned n, Variant variant, const OracleLimits& limits)
{
    guard(k, n, limits.max_k, limits.max_n, "brute-force count");
    Search search(k, n, true, std::vector<Mask>(k, all_symbols(n)));
    BigInt reduced = search.run();
    return variant == Variant::reduced ? reduced : reduced * factorial(n);
}

BigInt lonely_hall_count(unsigned k, unsigned n, const HallSet& omitted, const OracleLimits& limits)
{
    guard(k, n, limits.lonely_max_k, limits.lonely_max_n, "lonely-hall count");
    std::vector<Mask> allowed(k, all_symbols(n));
    for (const Hall& h : omitted) {
        if (h.row < 2 || h.row > k || h.floor < 1 || h.floor > n)
            throw std::invalid_argument("hall outside rows 2..k or floors 1..n");
        allowed[h.row - 1] &= ~(Mask{1} << h.floor);
    }
    Search search(k, n, false, std::move(allowed));
    return search.run();
}

Profile profile_of(const HallSet& omitted, unsigned k, unsigned n)
{
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    std::vector<std::int64_t> counts(std::size_t{1} << (k - 1), 0);
    std::vector<ClassIndex> floor_class(n + 1, 0);
    for (const Hall& h : omitted) {
        if (h.row < 2 || h.row > k || h.floor < 1 || h.floor > n)
            throw std::invalid_argument("hall outside rows 2..k or floors 1..n");
        floor_class[h.floor] |= ClassIndex{1} << (h.row - 2);
    }
    for (unsigned l = 1; l <= n; ++l) ++counts[floor_class[l]];
    return Profile(k - 1, std::move(counts));
}

}  // namespace latinrect
