// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "latinrect/bench.hpp"
#include "latinrect/cli.hpp"
#include "latinrect/column_counts.hpp"
#include "latinrect/enumerator.hpp"
#include "latinrect/expression.hpp"
#include "latinrect/oracle.hpp"
#include "latinrect/partition_lattice.hpp"
#include "latinrect/profile_space.hpp"
#include "support/brute.hpp"

using namespace latinrect;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool good, const std::string& what)
    {
        if (!good && passed) detail = what;
        passed = passed && good;
    }
};

std::string str(const BigInt& v) { return to_decimal(v); }

BigInt power(long long base, long long e)
{
    return e < 0 ? BigInt(0) : boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

std::string kn(unsigned k, unsigned n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

Outcome derangements()
{
    Outcome o;
    for (unsigned n = 0; n <= 10; ++n) {
        const BigInt oracle = brute_force_count(2, n, Variant::reduced, {4, 10, 3, 6});
        const BigInt classical = derangements_classical(n), ryser = derangements_ryser(n);
        const BigInt formula = reduced_count(2, n).value;
        o.require(oracle == classical && oracle == ryser && oracle == formula,
                  "n=" + std::to_string(n) + ": oracle " + str(oracle) + " classical " + str(classical) + " ryser " +
                      str(ryser) + " formula " + str(formula));
    }
    o.detail = o.passed ? "D(10) = " + str(derangements_ryser(10)) : o.detail;
    return o;
}

Outcome agreement(unsigned k, unsigned lo, unsigned hi)
{
    Outcome o;
    for (unsigned n = lo; n <= hi; ++n) {
        const BigInt oracle = brute_force_count(k, n, Variant::reduced);
        const BigInt formula = reduced_count(k, n).value;
        o.require(oracle == formula, kn(k, n) + ": oracle " + str(oracle) + " formula " + str(formula));
    }
    if (o.passed) o.detail = "R_" + std::to_string(k) + "(" + std::to_string(hi) + ") = " + str(reduced_count(k, hi).value);
    return o;
}

Outcome zero_rule()
{
    Outcome o;
    BigInt executed = 0;
    for (unsigned k = 2; k <= 5; ++k)
        for (unsigned n = 1; n < k; ++n) {
            const CountResult r = reduced_count(k, n);
            const BigInt expected_terms = brute::composition_count_dp(n, 1u << (k - 1));
            o.require(r.value == 0, kn(k, n) + ": value " + str(r.value));
            o.require(r.stats.term_count == expected_terms,
                      kn(k, n) + ": evaluated " + str(r.stats.term_count) + " of " + str(expected_terms) + " terms");
            executed += r.stats.term_count;
        }
    if (o.passed) o.detail = "full sums executed, " + str(executed) + " terms in total";
    return o;
}

Outcome g_ground_truth()
{
    Outcome o;
    std::size_t checked = 0;
    auto check = [&](unsigned k, unsigned n, const HallSet& s) {
        const BigInt expected = lonely_hall_count(k, n, s);
        const BigInt got = G(profile_of(s, k, n));
        ++checked;
        o.require(expected == got, kn(k, n) + " |S|=" + std::to_string(s.size()) + ": oracle " + str(expected) +
                                       " G " + str(got));
    };
    for (unsigned n = 1; n <= 5; ++n)
        for (const HallSet& s : all_hall_sets(2, n)) check(2, n, s);
    for (unsigned n = 1; n <= 4; ++n)
        for (const HallSet& s : all_hall_sets(3, n)) check(3, n, s);
    std::mt19937_64 rng(20240611);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 200; ++i) {
        HallSet s;
        for (unsigned row = 2; row <= 3; ++row)
            for (unsigned floor = 1; floor <= 5; ++floor)
                if (coin(rng)) s.insert({row, floor});
        check(3, 5, s);
    }
    if (o.passed) o.detail = std::to_string(checked) + " hall sets";
    return o;
}

Outcome ryser_bullets()
{
    Outcome o;
    for (long long n = 1; n <= 6; ++n) {
        const unsigned un = static_cast<unsigned>(n);
        const BigInt none = lonely_hall_count(2, un, {});
        const BigInt one = lonely_hall_count(2, un, {{2, 1}});
        o.require(none == power(n - 1, n), "(n-1)^n at n=" + std::to_string(n) + ": oracle " + str(none));
        o.require(one == BigInt(n - 1) * power(n - 2, n - 1),
                  "(n-1)(n-2)^(n-1) at n=" + std::to_string(n) + ": oracle " + str(one));
    }
    const BigInt two = lonely_hall_count(2, 5, {{2, 1}, {2, 2}});
    const BigInt derived = power(3, 2) * power(2, 3);
    const BigInt printed = power(3, 2) * power(2, 2);
    const std::string match = two == derived ? "(n-2)^2(n-3)^(n-2)" : two == printed ? "(n-2)^2(n-3)^(n-3)" : "neither";
    // the derived exponent is the one the column argument produces; the other is a misprint
    o.require(two == derived, "two omitted halls at n=5: oracle " + str(two) + " matches " + match);
    if (o.passed)
        o.detail = "two omitted halls at n=5: oracle " + str(two) + " matches " + match + " (" + str(derived) +
                   "), not (n-2)^2(n-3)^(n-3) (" + str(printed) + ")";
    return o;
}

Outcome non_reduced()
{
    Outcome o;
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 0; n <= 6; ++n) {
            const BigInt direct = total_count_direct(k, n, BracketVariant::derived).value;
            const BigInt bridge = factorial(n) * reduced_count(k, n).value;
            o.require(direct == bridge, kn(k, n) + ": direct " + str(direct) + " n!R " + str(bridge));
        }
    unsigned agree = 0;
    for (unsigned n = 0; n <= 6; ++n) {
        const BigInt literal = total_count_direct(2, n, BracketVariant::literal).value;
        const BigInt derived = total_count_direct(2, n, BracketVariant::derived).value;
        if (literal == derived) ++agree;
        o.require(literal == derived, "two-row brackets differ at n=" + std::to_string(n) + ": literal " +
                                          str(literal) + " derived " + str(derived));
    }
    if (o.passed) o.detail = "literal and derived two-row brackets agree for " + std::to_string(agree) + "/7 values of n";
    return o;
}

Outcome inclusion_exclusion()
{
    Outcome o;
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 0; n <= 4; ++n) {
            BigInt sum = 0;
            for (const HallSet& s : all_hall_sets(k, n)) {
                const BigInt c = lonely_hall_count(k, n, s);
                if (s.size() % 2) sum -= c;
                else sum += c;
            }
            const BigInt oracle = brute_force_count(k, n, Variant::reduced);
            o.require(sum == oracle, kn(k, n) + ": alternating sum " + str(sum) + " oracle " + str(oracle));
        }
    return o;
}

Outcome expression_loop()
{
    Outcome o;
    for (unsigned k = 2; k <= 4; ++k) {
        const Expression e = generate_expression(k);
        for (unsigned n = 0; n <= 8; ++n) {
            const BigInt a = evaluate_expression(e, n), b = reduced_count(k, n).value;
            o.require(a == b, kn(k, n) + ": expression " + str(a) + " enumerator " + str(b));
        }
    }
    const std::size_t bell[] = {1, 2, 5, 15};
    for (unsigned k = 2; k <= 5; ++k) {
        const std::size_t size = generate_expression(k).g_expansion.size();
        o.require(size == bell[k - 2] && BigInt(size) == bell_number(k - 1),
                  "k=" + std::to_string(k) + ": " + std::to_string(size) + " g terms");
    }
    return o;
}

std::string fixed(double v, int digits = 3)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

Outcome term_counts()
{
    Outcome o;
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned n = 0; n <= 40; ++n) {
            const unsigned classes = 1u << (k - 1);
            const BigInt closed = binomial(n + classes - 1, classes - 1);
            o.require(composition_count(n, k - 1) == closed && brute::composition_count_dp(n, classes) == closed,
                      kn(k, n) + ": closed form " + str(closed));
        }
    // the evaluator visits exactly that many terms
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned n : {0u, 1u, 7u, 12u}) {
            const BigInt closed = binomial(n + (1u << (k - 1)) - 1, (1u << (k - 1)) - 1);
            o.require(reduced_count(k, n).stats.term_count == closed, kn(k, n) + ": evaluated term count");
        }
    return o;
}

Outcome slope(unsigned k, unsigned lo, unsigned hi, double target, double tolerance)
{
    Outcome o;
    const SweepResult s = sweep(k, lo, hi, 1, default_max_terms());
    const double fitted = s.paper_model_exponent.value_or(std::nan(""));
    o.require(std::abs(fitted - target) <= tolerance,
              "fitted exponent " + fixed(fitted) + " outside " + fixed(target, 1) + " +/- " + fixed(tolerance, 1));
    o.detail = "k=" + std::to_string(k) + " n=" + std::to_string(lo) + ".." + std::to_string(hi) +
               ": naive-powering exponent " + fixed(fitted) + " (target " + fixed(target, 1) + " +/- " +
               fixed(tolerance, 1) + "), terms exponent " + fixed(s.terms_exponent.value_or(std::nan(""))) +
               ", actual exponent " + fixed(s.actual_exponent.value_or(std::nan("")));
    return o;
}

Outcome determinism()
{
    Outcome o;
    std::vector<std::string> values, human, json;
    const unsigned max_threads = std::max(2u, std::thread::hardware_concurrency());
    for (unsigned t : {1u, 2u, max_threads}) {
        EvalOptions opts;
        opts.threads = t;
        values.push_back(str(reduced_count(4, 10, opts).value));

        std::ostringstream out, err, jout, jerr;
        cli::run({"count", "--k", "4", "--n", "10", "--threads", std::to_string(t)}, out, err);
        human.push_back(out.str());
        cli::run({"count", "--k", "4", "--n", "10", "--threads", std::to_string(t), "--format", "json"}, jout, jerr);
        auto j = nlohmann::ordered_json::parse(jout.str());
        j.erase("elapsed_ms");
        json.push_back(j.dump());
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        o.require(values[i] == values[0], "value differs: " + values[0] + " vs " + values[i]);
        o.require(human[i] == human[0], "human output differs");
        o.require(json[i] == json[0], "json output differs");
    }
    if (o.passed)
        o.detail = "R_4(10) = " + values[0] + " at 1, 2 and " + std::to_string(max_threads) + " threads";
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        std::string id;
        std::string name;
        double seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1", "derangement agreement, n <= 10", 1, derangements},
        {"2", "R_3 formula vs oracle, 3 <= n <= 7", 30, [] { return agreement(3, 3, 7); }},
        {"3", "R_4 formula vs oracle, 4 <= n <= 6", 120, [] { return agreement(4, 4, 6); }},
        {"4", "zero rule for n < k <= 5 without short-circuit", 0, zero_rule},
        {"5", "G matches lonely-hall oracle", 120, g_ground_truth},
        {"6", "two-row lonely-hall closed forms", 10, ryser_bullets},
        {"7", "non-reduced formulas and bracket variants", 60, non_reduced},
        {"8", "alternating sum over hall sets equals oracle, k <= 3, n <= 4", 0, inclusion_exclusion},
        {"9", "expression evaluation loop and Bell sizes", 60, expression_loop},
        {"10a", "term count closed form, k <= 5, n <= 40", 0, term_counts},
        {"10b", "k=2 naive-powering cost exponent", 0, [] { return slope(2, 8, 64, 2.0, 0.3); }},
        {"10c", "k=3 naive-powering cost exponent", 0, [] { return slope(3, 8, 32, 4.0, 0.4); }},
        {"11", "determinism across thread counts", 0, determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.seconds > 0 && elapsed > c.seconds) {
            o.detail = "took " + fixed(elapsed, 1) + " s, limit " + fixed(c.seconds, 0) + " s" +
                       (o.detail.empty() ? "" : "; " + o.detail);
            o.passed = false;
        }
        if (!o.passed) ++failures;
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.name << " (" << fixed(elapsed, 2) << " s)";
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
