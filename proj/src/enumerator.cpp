#include "latinrect/enumerator.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <thread>
#include <vector>

#include "latinrect/column_counts.hpp"
#include "latinrect/profile_space.hpp"

namespace latinrect {

namespace {

constexpr std::uint64_t kDefaultMaxTerms = 100'000'000;
constexpr std::uint64_t kChunk = 256;
constexpr unsigned kMaxRows = 16;

struct PartialSum {
    BigInt value = 0;
    OpTally ops;
    std::uint64_t terms = 0;
};

void check_shape(unsigned k, unsigned classes_rows, std::uint64_t max_terms, unsigned n, std::string_view what)
{
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (k > kMaxRows) throw std::invalid_argument("k is too large (at most 16 rows)");
    const BigInt predicted = composition_count(n, classes_rows);
    if (predicted > max_terms) {
        throw ResourceGuardError(std::string(what) + " for k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                                     " needs " + to_decimal(predicted) + " terms, above the ceiling of " +
                                     std::to_string(max_terms) + " (see --max-terms / LATINRECT_MAX_TERMS)",
                                 predicted);
    }
}

/// Sums term(arith, profile) * sign(profile) over every composition of n into 2^m classes.
///
/// Worker w takes the chunks of kChunk consecutive compositions whose chunk
/// number is congruent to w modulo the worker count. Partial sums are combined
/// in worker order; exact arithmetic makes the result independent of the split.
template <class Arith, class TermFn>
PartialSum run_one(unsigned n, unsigned m, unsigned worker, unsigned workers, const TermFn& term)
{
    Arith ar;
    PartialSum out;
    CompositionCursor cursor(n, m);
    std::uint64_t index = 0;
    do {
        if ((index / kChunk) % workers == worker) {
            const Profile& s = cursor.current();
            BigInt t = term(ar, s);
            out.value = sign(s) > 0 ? ar.add(out.value, t) : ar.sub(out.value, t);
            ++out.terms;
        }
        ++index;
    } while (cursor.next());
    if constexpr (std::is_same_v<Arith, CountingArith>) out.ops = ar.tally();
    return out;
}

template <class Arith, class TermFn>
PartialSum run_parallel(unsigned n, unsigned m, unsigned threads, const TermFn& term)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<PartialSum> partials(threads);
    if (threads == 1) {
        partials[0] = run_one<Arith>(n, m, 0, 1, term);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] { partials[w] = run_one<Arith>(n, m, w, threads, term); });
    }
    PartialSum total;
    for (const auto& p : partials) {
        total.value += p.value;
        total.ops += p.ops;
        total.terms += p.terms;
    }
    return total;
}

template <class TermFn>
PartialSum sum_terms(unsigned n, unsigned m, const EvalOptions& opts, const TermFn& term)
{
    return opts.instrument ? run_parallel<CountingArith>(n, m, opts.threads, term)
                           : run_parallel<PlainArith>(n, m, opts.threads, term);
}

template <class Arith>
BigInt multinomial_with(Arith& ar, const Profile& s, const FactorialTable& table)
{
    std::optional<BigInt> denominator;
    for (std::int64_t c : s.counts()) {
        if (c < 2) continue;
        const BigInt& f = table[static_cast<std::size_t>(c)];
        denominator = denominator ? ar.mul(*denominator, f) : f;
    }
    const BigInt& numerator = table[static_cast<std::size_t>(s.total())];
    return denominator ? ar.div(numerator, *denominator) : numerator;
}

double millis_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::formula: return "formula";
    case Method::oracle: return "oracle";
    case Method::factorial_bridge: return "factorial-bridge";
    case Method::direct_l: return "direct-L";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::formula, Method::oracle, Method::factorial_bridge, Method::direct_l})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string_view to_string(BracketVariant b)
{
    return b == BracketVariant::derived ? "derived" : "literal";
}

BracketVariant parse_bracket(std::string_view name)
{
    if (name == "derived") return BracketVariant::derived;
    if (name == "literal") return BracketVariant::literal;
    throw std::invalid_argument("unknown bracket variant: " + std::string(name));
}

std::uint64_t default_max_terms()
{
    if (const char* env = std::getenv("LATINRECT_MAX_TERMS"); env && *env) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxTerms;
}

CountResult reduced_count(unsigned k, unsigned n, const EvalOptions& opts)
{
    check_shape(k, k == 0 ? 0 : k - 1, opts.max_terms, n, "reduced count");
    const auto start = std::chrono::steady_clock::now();
    const FactorialTable table(n);
    const std::int64_t fault = opts.g_fault;

    auto term = [&table, fault](auto& ar, const Profile& s) {
        BigInt coefficient = multinomial_with(ar, s, table);
        BigInt count = detail::G_with(ar, s, fault);
        return ar.mul(coefficient, count);
    };
    PartialSum sum = sum_terms(n, k - 1, opts, term);

    CountResult r;
    r.k = k;
    r.n = n;
    r.variant = Variant::reduced;
    r.method = Method::formula;
    r.value = std::move(sum.value);
    r.stats.term_count = sum.terms;
    r.stats.ops = sum.ops;
    r.stats.elapsed_ms = millis_since(start);
    return r;
}

CountResult total_count(unsigned k, unsigned n, const EvalOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    CountResult r = reduced_count(k, n, opts);
    r.value *= factorial(n);
    if (opts.instrument) ++r.stats.ops.mults;
    r.variant = Variant::total;
    r.method = Method::factorial_bridge;
    r.stats.elapsed_ms = millis_since(start);
    return r;
}

CountResult total_count_direct(unsigned k, unsigned n, BracketVariant bracket, const EvalOptions& opts)
{
    check_shape(k, k, opts.max_terms, n, "direct total count");
    const auto start = std::chrono::steady_clock::now();
    const FactorialTable table(n);
    const bool literal = bracket == BracketVariant::literal && k == 2;

    auto term = [&table, n, literal](auto& ar, const Profile& s) {
        BigInt base;
        if (literal) {
            // (s00 + s10)(s00 + s01) - s11, with index 1 = s10, 2 = s01, 3 = s11
            base = ar.sub(ar.mul(ar.add(BigInt(s[0]), BigInt(s[1])), ar.add(BigInt(s[0]), BigInt(s[2]))),
                          BigInt(s[3]));
        } else {
            base = detail::g_with(ar, s);
        }
        return ar.mul(multinomial_with(ar, s, table), ar.pow(base, n));
    };
    PartialSum sum = sum_terms(n, k, opts, term);

    CountResult r;
    r.k = k;
    r.n = n;
    r.variant = Variant::total;
    r.method = Method::direct_l;
    r.value = std::move(sum.value);
    r.stats.term_count = sum.terms;
    r.stats.ops = sum.ops;
    r.stats.elapsed_ms = millis_since(start);
    r.extrapolated = k > 3;
    return r;
}

BigInt derangements_classical(unsigned n)
{
    // n!/r! for r = n, n-1, ..., 0 built by running products
    BigInt sum = 0;
    BigInt ratio = 1;
    for (unsigned r = n + 1; r-- > 0;) {
        if (r % 2 == 0)
            sum += ratio;
        else
            sum -= ratio;
        ratio *= r;
    }
    return sum;
}

BigInt derangements_ryser(unsigned n)
{
    BigInt sum = 0;
    for (unsigned r = 0; r <= n; ++r) {
        const BigInt a = boost::multiprecision::pow(BigInt(n - r), r);
        // (n - r - 1)^(n - r); at r = n this is (-1)^0 = 1
        const BigInt b = boost::multiprecision::pow(BigInt(static_cast<long long>(n) - r - 1), n - r);
        const BigInt term = binomial(n, r) * a * b;
        if (r % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace latinrect
