#include "latinrect/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "latinrect/column_counts.hpp"
#include "latinrect/enumerator.hpp"
#include "latinrect/oracle.hpp"

namespace latinrect {

namespace {

void check(SuiteOutcome& s, bool good, const std::string& description)
{
    ++s.total;
    if (good)
        ++s.passed;
    else if (!s.counterexample)
        s.counterexample = description;
}

std::string mismatch(const std::string& where, const BigInt& expected, const BigInt& got)
{
    return where + ": expected " + to_decimal(expected) + ", got " + to_decimal(got);
}

BigInt power(long long base, long long e)
{
    return e < 0 ? BigInt(0) : boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

SuiteOutcome formula_vs_oracle(const SelftestConfig& c)
{
    SuiteOutcome s{"formula-vs-oracle", 0, 0, std::nullopt, {}};
    const OracleLimits limits;
    EvalOptions opts;
    opts.threads = c.threads;
    opts.g_fault = c.g_fault;
    for (unsigned k = 2; k <= c.max_k; ++k) {
        for (unsigned n = 0; n <= c.max_n; ++n) {
            if (k > limits.max_k || n > limits.max_n) continue;
            const BigInt expected = brute_force_count(k, n, Variant::reduced, limits);
            const BigInt got = reduced_count(k, n, opts).value;
            check(s, expected == got, mismatch("k=" + std::to_string(k) + " n=" + std::to_string(n), expected, got));
            if (k == 2) {
                const BigInt classical = derangements_classical(n);
                const BigInt ryser = derangements_ryser(n);
                check(s, classical == expected && ryser == expected,
                      "derangements n=" + std::to_string(n) + ": oracle " + to_decimal(expected) + ", classical " +
                          to_decimal(classical) + ", ryser " + to_decimal(ryser));
            }
        }
    }
    return s;
}

SuiteOutcome g_vs_lonely_hall(const SelftestConfig& c)
{
    SuiteOutcome s{"G-vs-lonely-hall", 0, 0, std::nullopt, {}};
    for (unsigned k = 2; k <= std::min(c.max_k, 3u); ++k) {
        const unsigned n_max = std::min(c.max_n, k == 2 ? 5u : 4u);
        for (unsigned n = 1; n <= n_max; ++n) {
            for (const HallSet& halls : all_hall_sets(k, n)) {
                const BigInt expected = lonely_hall_count(k, n, halls);
                PlainArith ar;
                const BigInt got = detail::G_with(ar, profile_of(halls, k, n), c.g_fault);
                if (expected == got) {
                    check(s, true, {});
                    continue;
                }
                std::ostringstream where;
                where << "k=" << k << " n=" << n << " S={";
                bool first = true;
                for (const Hall& h : halls) {
                    where << (first ? "" : ",") << '(' << h.row << ',' << h.floor << ')';
                    first = false;
                }
                where << '}';
                check(s, false, mismatch(where.str(), expected, got));
            }
        }
    }
    return s;
}

SuiteOutcome ryser_bullets(const SelftestConfig& c)
{
    SuiteOutcome s{"ryser-bullets", 0, 0, std::nullopt, {}};
    const unsigned n_max = std::min(c.max_n, 6u);
    for (unsigned n = 1; n <= n_max; ++n) {
        const long long nn = n;
        const BigInt none = lonely_hall_count(2, n, {});
        check(s, none == power(nn - 1, nn), mismatch("(n-1)^n at n=" + std::to_string(n), power(nn - 1, nn), none));
        const BigInt one = lonely_hall_count(2, n, {{2, 1}});
        const BigInt one_expected = BigInt(nn - 1) * power(nn - 2, nn - 1);
        check(s, one == one_expected, mismatch("(n-1)(n-2)^(n-1) at n=" + std::to_string(n), one_expected, one));
    }
    if (c.max_n >= 5) {
        const long long n = 5;
        const BigInt two = lonely_hall_count(2, 5, {{2, 1}, {2, 2}});
        const BigInt derived = power(n - 2, 2) * power(n - 3, n - 2);
        const BigInt printed = power(n - 2, 2) * power(n - 3, n - 3);
        check(s, two == derived, mismatch("(n-2)^2 (n-3)^(n-2) at n=5", derived, two));
        s.notes.push_back("two omitted halls at n=5: oracle " + to_decimal(two) + ", (n-2)^2(n-3)^(n-2) = " +
                          to_decimal(derived) + ", (n-2)^2(n-3)^(n-3) = " + to_decimal(printed) + "; matches " +
                          (two == derived ? "(n-2)^2(n-3)^(n-2)"
                                          : two == printed ? "(n-2)^2(n-3)^(n-3)" : "neither"));
    }
    return s;
}

SuiteOutcome bracket_variant(const SelftestConfig& c)
{
    SuiteOutcome s{"bracket-variant", 0, 0, std::nullopt, {}};
    EvalOptions opts;
    opts.threads = c.threads;
    opts.g_fault = c.g_fault;
    unsigned agree = 0, compared = 0;
    for (unsigned k = 1; k <= std::min(c.max_k, 3u); ++k) {
        for (unsigned n = 0; n <= c.max_n; ++n) {
            const BigInt bridge = total_count(k, n, opts).value;
            const BigInt direct = total_count_direct(k, n, BracketVariant::derived, opts).value;
            const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n);
            check(s, bridge == direct, mismatch("direct-L " + where, bridge, direct));
            if (k == 2) {
                const BigInt literal = total_count_direct(2, n, BracketVariant::literal, opts).value;
                ++compared;
                if (literal == direct) ++agree;
                check(s, literal == direct, mismatch("literal bracket " + where, direct, literal));
            }
        }
    }
    if (compared > 0)
        s.notes.push_back("two-row brackets (-s00 vs -s11) agree for " + std::to_string(agree) + "/" +
                          std::to_string(compared) + " values of n");
    return s;
}

SuiteOutcome zero_rule(const SelftestConfig& c)
{
    SuiteOutcome s{"zero-rule", 0, 0, std::nullopt, {}};
    EvalOptions opts;
    opts.threads = c.threads;
    opts.g_fault = c.g_fault;
    for (unsigned k = 2; k <= std::max(c.max_k, 5u); ++k) {
        for (unsigned n = 1; n < k; ++n) {
            const CountResult r = reduced_count(k, n, opts);
            const BigInt terms = composition_count(n, k - 1);
            check(s, r.value == 0 && r.stats.term_count == terms,
                  "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": value " + to_decimal(r.value) +
                      " after " + to_decimal(r.stats.term_count) + " of " + to_decimal(terms) + " terms");
        }
    }
    return s;
}

}  // namespace

std::vector<SuiteOutcome> run_selftest(const SelftestConfig& config)
{
    return {formula_vs_oracle(config), g_vs_lonely_hall(config), ryser_bullets(config), bracket_variant(config),
            zero_rule(config)};
}

void print_selftest(std::ostream& out, const std::vector<SuiteOutcome>& suites)
{
    for (const auto& s : suites) {
        out << s.name << ": " << s.passed << '/' << s.total << (s.counterexample ? " FAIL" : " ok") << '\n';
        if (s.counterexample) out << "  counterexample: " << *s.counterexample << '\n';
        for (const auto& note : s.notes) out << "  note: " << note << '\n';
    }
}

}  // namespace latinrect
