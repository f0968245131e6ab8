#include <doctest.h>

#include <random>

#include "latinrect/column_counts.hpp"
#include "support/brute.hpp"

using namespace latinrect;

namespace {

Profile profile_from_classes(unsigned m, const std::vector<unsigned>& floor_class)
{
    std::vector<std::int64_t> counts(std::size_t{1} << m, 0);
    for (unsigned c : floor_class) ++counts[c];
    return Profile(m, counts);
}

BigInt pow_big(long long base, unsigned e)
{
    return boost::multiprecision::pow(BigInt(base), e);
}

}  // namespace

TEST_CASE("block sums")
{
    // t000=2, t010=1, t001=1, t011=1 with bit i-1 <-> row i
    Profile t(3, {2, 0, 1, 0, 1, 0, 1, 0});
    const unsigned one[] = {1}, one_two[] = {1, 2}, all[] = {1, 2, 3};
    CHECK(f_block(t, one) == 5);
    CHECK(f_block(t, one_two) == 3);
    CHECK(f_block(t, all) == 2);
    CHECK_THROWS_AS(f_block(t, 0u), std::invalid_argument);
    CHECK_THROWS_AS(f_block(t, 0b1000u), std::invalid_argument);
}

TEST_CASE("g examples")
{
    CHECK(g(Profile(2, {2, 1, 1, 0})) == 7);
    CHECK(g(Profile(2, {1, 0, 0, 0})) == 0);
    CHECK(g(Profile(1, {3, 2})) == 3);
    CHECK(g(Profile(0, {4})) == 1);
    CHECK(g(Profile(0, {0})) == 1);
    for (unsigned m = 1; m <= 4; ++m) CHECK(g(Profile::concentrated(m, 0)) == 0);
    // signed arguments are plain polynomial evaluation
    CHECK(g(Profile(2, {-1, 2, 0, 3})) == (-1 + 2) * (-1 + 0) - (-1));
}

TEST_CASE("g counts injective choices (exhaustive over floor classes)")
{
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 0; n <= 5; ++n) {
            if (m == 3 && n == 5) continue;  // 8^5 class assignments, covered below by sampling
            const unsigned classes = 1u << m;
            std::vector<unsigned> floor_class(n, 0);
            for (;;) {
                CHECK(g(profile_from_classes(m, floor_class)) == brute::injective_tuples(m, floor_class));
                unsigned i = 0;
                while (i < n && ++floor_class[i] == classes) floor_class[i++] = 0;
                if (i == n) break;
            }
        }
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<unsigned> floor_class(5);
        for (auto& c : floor_class) c = rng() % 8;
        CHECK(g(profile_from_classes(3, floor_class)) == brute::injective_tuples(3, floor_class));
    }
}

TEST_CASE("g on the all-zeros class is a falling factorial")
{
    for (unsigned m = 0; m <= 4; ++m)
        for (long long n = 0; n <= 12; ++n) {
            BigInt falling = 1;
            for (unsigned i = 0; i < m; ++i) falling *= n - i;
            CHECK(g(Profile::concentrated(m, n)) == falling);
        }
}

TEST_CASE("shift_profile")
{
    CHECK(shift_profile(Profile(2, {3, 1, 0, 1}), 0) == Profile(2, {2, 1, 0, 2}));
    CHECK(shift_profile(Profile(2, {3, 1, 0, 1}), 3) == Profile(2, {3, 1, 0, 1}));
    CHECK(shift_profile(Profile(2, {0, 2, 0, 0}), 1) == Profile(2, {0, 1, 0, 1}));
    CHECK_THROWS_AS(shift_profile(Profile(2, {3, 1, 0, 1}), 2), std::domain_error);
}

TEST_CASE("G examples")
{
    CHECK(G(Profile(1, {3, 0})) == 8);
    CHECK(G(Profile(1, {3, 1})) == 24);
    CHECK(G(Profile(1, {2, 2})) == 4);
    CHECK(G(Profile(0, {5})) == 1);
    CHECK(G(Profile(2, {0, 0, 0, 0})) == 1);
}

TEST_CASE("G on two rows equals the Ryser summand")
{
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned r = 0; r <= n; ++r) {
            const long long a = n - r;
            const BigInt expected = pow_big(a, r) * pow_big(a - 1, n - r);
            CHECK(G(Profile(1, {a, static_cast<long long>(r)})) == expected);
        }
}

TEST_CASE("G is nonnegative on valid profiles")
{
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 6; ++n)
            for (const auto& s : compositions(n, m)) CHECK(G(s) >= 0);
}

TEST_CASE("counting arithmetic gives the same values")
{
    for (const auto& s : compositions(6, 2)) {
        CountingArith counted;
        PlainArith plain;
        CHECK(detail::G_with(counted, s) == detail::G_with(plain, s));
    }
    CountingArith ar;
    CHECK(ar.pow(3, 13) == 1594323);
    // 13 = 0b1101: three squarings, two extra products
    CHECK(ar.tally().power_mults_actual == 5);
    CHECK(ar.tally().power_mults_naive == 12);
}
