#include <doctest.h>

#include "latinrect/enumerator.hpp"
#include "latinrect/profile_space.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace latinrect;

TEST_CASE("reduced_count examples")
{
    CHECK(reduced_count(1, 5).value == 1);
    CHECK(reduced_count(2, 4).value == 9);
    CHECK(reduced_count(3, 3).value == 2);
    CHECK(reduced_count(3, 2).value == 0);
}

TEST_CASE("empty rectangle convention")
{
    for (unsigned k = 1; k <= 6; ++k) {
        CHECK(reduced_count(k, 0).value == 1);
        CHECK(total_count(k, 0).value == 1);
        CHECK(total_count_direct(std::min(k, 4u), 0).value == 1);
    }
}

TEST_CASE("total counts")
{
    CHECK(total_count(1, 4).value == 24);
    CHECK(total_count(2, 3).value == 12);
    CHECK(total_count(3, 3).value == 12);
    CHECK(total_count(3, 3).method == Method::factorial_bridge);

    CHECK(total_count_direct(1, 3).value == 6);
    CHECK(total_count_direct(2, 2, BracketVariant::derived).value == 2);
    CHECK(total_count_direct(2, 2, BracketVariant::literal).value == 2);
    CHECK(total_count_direct(3, 3).value == 12);
    CHECK_FALSE(total_count_direct(3, 3).extrapolated);
    CHECK(total_count_direct(4, 2).extrapolated);
}

TEST_CASE("derangement formulas")
{
    CHECK(derangements_classical(0) == 1);
    CHECK(derangements_classical(3) == 2);
    CHECK(derangements_classical(4) == 9);
    CHECK(derangements_ryser(1) == 0);
    CHECK(derangements_ryser(3) == 2);
    CHECK(derangements_ryser(4) == 9);
    for (unsigned n = 0; n <= 12; ++n) {
        const BigInt d = derangements_classical(n);
        CHECK(derangements_ryser(n) == d);
        CHECK(reduced_count(2, n).value == d);
        if (n <= 9) CHECK(d == brute::derangements_by_permutation(n));
    }
}

TEST_CASE("formula matches the permutation-row oracle")
{
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned n = 0; n <= 5; ++n) CHECK(reduced_count(k, n).value == brute::latin_by_permutations(k, n));
}

TEST_CASE("formula matches frozen oracle fixtures")
{
    for (const auto& [key, value] : fixtures::reduced_counts()) {
        const auto [k, n] = key;
        CAPTURE(k);
        CAPTURE(n);
        CHECK(reduced_count(k, n).value == value);
    }
}

TEST_CASE("direct total count matches n! R_k(n)")
{
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 0; n <= 6; ++n) {
            const BigInt bridge = total_count(k, n).value;
            CHECK(total_count_direct(k, n, BracketVariant::derived).value == bridge);
            if (k == 2) CHECK(total_count_direct(k, n, BracketVariant::literal).value == bridge);
        }
    // beyond the printed cases the same rule still counts correctly
    CHECK(total_count_direct(4, 4).value == 576);
}

TEST_CASE("zero rule without special cases")
{
    for (unsigned k = 2; k <= 5; ++k)
        for (unsigned n = 1; n < k; ++n) {
            const CountResult r = reduced_count(k, n);
            CHECK(r.value == 0);
            CHECK(r.stats.term_count == composition_count(n, k - 1));
        }
}

TEST_CASE("thread count does not change values or tallies")
{
    EvalOptions one;
    one.instrument = true;
    const CountResult base = reduced_count(4, 9, one);
    for (unsigned threads : {2u, 3u, 8u, 0u}) {
        EvalOptions opts = one;
        opts.threads = threads;
        const CountResult r = reduced_count(4, 9, opts);
        CHECK(r.value == base.value);
        CHECK(r.stats.term_count == base.stats.term_count);
        CHECK(r.stats.ops == base.stats.ops);
    }
}

TEST_CASE("instrumentation does not change values")
{
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned n = 0; n <= 8; ++n) {
            EvalOptions counted;
            counted.instrument = true;
            CHECK(reduced_count(k, n, counted).value == reduced_count(k, n).value);
        }
}

TEST_CASE("resource guard")
{
    EvalOptions opts;
    opts.max_terms = 100;
    CHECK_NOTHROW(reduced_count(3, 5, opts));  // 56 terms
    try {
        reduced_count(3, 20, opts);
        FAIL("expected a guard refusal");
    } catch (const ResourceGuardError& e) {
        CHECK(e.predicted() == composition_count(20, 2));
        CHECK(std::string(e.what()).find("1771") != std::string::npos);
    }
    CHECK_THROWS_AS(total_count_direct(3, 20, BracketVariant::derived, opts), ResourceGuardError);
    CHECK_THROWS_AS(reduced_count(0, 3), std::invalid_argument);
}

TEST_CASE("method names")
{
    for (Method m : {Method::formula, Method::oracle, Method::factorial_bridge, Method::direct_l})
        CHECK(parse_method(to_string(m)) == m);
    CHECK(to_string(Method::direct_l) == "direct-L");
    CHECK_THROWS_AS(parse_method("magic"), std::invalid_argument);
    CHECK(parse_bracket("literal") == BracketVariant::literal);
}
