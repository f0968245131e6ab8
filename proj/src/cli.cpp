#include "latinrect/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latinrect/bench.hpp"
#include "latinrect/expression.hpp"
#include "latinrect/oracle.hpp"
#include "latinrect/selftest.hpp"

namespace latinrect::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double round_ms(double ms)
{
    return std::round(ms * 1000.0) / 1000.0;
}

std::string fixed3(double v)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << v;
    return s.str();
}

/// Writes to --out when given, otherwise to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file: " + path);
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

HallSet parse_halls(const std::string& text)
{
    HallSet halls;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("hall must be ROW:FLOOR, got '" + item + "'");
        try {
            halls.insert({static_cast<unsigned>(std::stoul(item.substr(0, colon))),
                          static_cast<unsigned>(std::stoul(item.substr(colon + 1)))});
        } catch (const std::logic_error&) {
            throw UsageError("hall must be ROW:FLOOR, got '" + item + "'");
        }
    }
    return halls;
}

struct CommonFlags {
    unsigned k = 0;
    std::string n = "";
    bool reduced = false;
    bool total = false;
    std::string method = "formula";
    std::string bracket = "derived";
    std::string format;
    std::uint64_t max_terms = default_max_terms();
    unsigned threads = 0;
    std::string out;
};

Variant variant_of(const CommonFlags& f)
{
    return f.total ? Variant::total : Variant::reduced;
}

unsigned single_n(const CommonFlags& f)
{
    const auto [a, b] = parse_range(f.n);
    if (a != b) throw UsageError("--n must be a single value for this command");
    return a;
}

CountResult run_count(const CommonFlags& f)
{
    const unsigned n = single_n(f);
    const Variant variant = variant_of(f);
    const Method method = parse_method(f.method);
    EvalOptions opts;
    opts.threads = f.threads;
    opts.max_terms = f.max_terms;
    opts.instrument = true;

    switch (method) {
    case Method::formula:
        return variant == Variant::reduced ? reduced_count(f.k, n, opts) : total_count(f.k, n, opts);
    case Method::factorial_bridge:
        if (variant == Variant::reduced) throw UsageError("factorial-bridge yields total counts; pass --total");
        return total_count(f.k, n, opts);
    case Method::direct_l: {
        CountResult r = total_count_direct(f.k, n, parse_bracket(f.bracket), opts);
        if (variant == Variant::reduced) {
            r.value /= factorial(n);
            r.variant = Variant::reduced;
        }
        return r;
    }
    case Method::oracle: {
        const auto start = std::chrono::steady_clock::now();
        CountResult r;
        r.k = f.k;
        r.n = n;
        r.variant = variant;
        r.method = Method::oracle;
        r.value = brute_force_count(f.k, n, variant);
        r.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    }
    throw UsageError("unknown method");
}

int cmd_count(const CommonFlags& f, std::ostream& out, std::ostream& err)
{
    const std::string format = f.format.empty() ? "human" : f.format;
    if (format != "human" && format != "json" && format != "csv") throw UsageError("count supports human|json|csv");
    const CountResult r = run_count(f);
    Sink sink(f.out, out);
    if (format == "json")
        sink.stream() << count_json(r) << '\n';
    else if (format == "csv")
        sink.stream() << "k,n,variant,method,value,terms,adds,mults,elapsed_ms\n" << count_csv(r) << '\n';
    else {
        sink.stream() << count_human(r);
        err << "elapsed_ms: " << fixed3(r.stats.elapsed_ms) << '\n';
    }
    return ExitCode::ok;
}

int cmd_expr(const CommonFlags& f, unsigned max_k, bool standalone, std::ostream& out)
{
    const std::string format = f.format.empty() ? "text" : f.format;
    const Expression e = generate_expression(f.k, max_k);
    Sink sink(f.out, out);
    const std::string body = render(e, parse_render_format(format));
    if (standalone && format == "latex")
        sink.stream() << "\\documentclass{article}\n\\begin{document}\n" << body << "\\end{document}\n";
    else
        sink.stream() << body;
    return ExitCode::ok;
}

int cmd_table(const CommonFlags& f, std::ostream& out)
{
    const std::string format = f.format.empty() ? "csv" : f.format;
    if (format != "human" && format != "json" && format != "csv") throw UsageError("table supports human|json|csv");
    const auto [lo, hi] = parse_range(f.n);
    EvalOptions opts;
    opts.threads = f.threads;
    opts.max_terms = f.max_terms;

    Sink sink(f.out, out);
    auto& os = sink.stream();
    if (format == "csv") os << "n,R,L\n";
    if (format == "human") os << std::setw(4) << "n" << "  " << "R_" << f.k << "(n)  L_" << f.k << "(n)\n";
    for (unsigned n = lo; n <= hi; ++n) {
        const BigInt reduced = reduced_count(f.k, n, opts).value;
        const BigInt total = reduced * factorial(n);
        if (format == "csv") {
            os << n << ',' << to_decimal(reduced) << ',' << to_decimal(total) << '\n';
        } else if (format == "json") {
            nlohmann::ordered_json j;
            j["k"] = f.k;
            j["n"] = n;
            j["R"] = to_decimal(reduced);
            j["L"] = to_decimal(total);
            os << j.dump() << '\n';
        } else {
            os << std::setw(4) << n << "  " << to_decimal(reduced) << "  " << to_decimal(total) << '\n';
        }
    }
    return ExitCode::ok;
}

int cmd_bench(const CommonFlags& f, unsigned step, const std::string& csv_path, std::ostream& out)
{
    const std::string format = f.format.empty() ? "csv" : f.format;
    if (format != "json" && format != "csv") throw UsageError("bench supports csv|json");
    const auto [lo, hi] = parse_range(f.n);
    const SweepResult result = sweep(f.k, lo, hi, step, f.max_terms);
    if (!csv_path.empty()) {
        Sink file(csv_path, out);
        write_csv(file.stream(), f.k, result);
    }
    Sink sink(f.out, out);
    if (format == "json")
        write_json_lines(sink.stream(), f.k, result);
    else if (csv_path.empty() || !f.out.empty())
        write_csv(sink.stream(), f.k, result);
    return ExitCode::ok;
}

int cmd_oracle(const CommonFlags& f, const std::string& halls_text, unsigned max_k, unsigned max_n,
               std::ostream& out)
{
    const std::string format = f.format.empty() ? "human" : f.format;
    if (format != "human" && format != "json") throw UsageError("oracle supports human|json");
    const unsigned n = single_n(f);
    OracleLimits limits;
    if (max_k) limits.max_k = limits.lonely_max_k = max_k;
    if (max_n) limits.max_n = limits.lonely_max_n = max_n;

    nlohmann::ordered_json j;
    j["k"] = f.k;
    j["n"] = n;
    if (!halls_text.empty()) {
        const HallSet halls = parse_halls(halls_text);
        const Profile p = profile_of(halls, f.k, n);
        j["kind"] = "lonely-hall";
        j["halls"] = halls_text;
        j["value"] = to_decimal(lonely_hall_count(f.k, n, halls, limits));
        nlohmann::ordered_json profile = nlohmann::ordered_json::object();
        for (ClassIndex v = 0; v < p.class_count(); ++v)
            profile["s" + ClassVector(p.m(), v).to_string()] = p[v];
        j["profile"] = profile;
    } else {
        j["kind"] = "latin";
        j["variant"] = std::string(to_string(variant_of(f)));
        j["value"] = to_decimal(brute_force_count(f.k, n, variant_of(f), limits));
    }
    Sink sink(f.out, out);
    if (format == "json") {
        sink.stream() << j.dump() << '\n';
    } else {
        for (const auto& [key, value] : j.items())
            sink.stream() << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return ExitCode::ok;
}

int cmd_selftest(const CommonFlags& f, const std::string& fault, std::ostream& out)
{
    const std::string format = f.format.empty() ? "human" : f.format;
    if (format != "human" && format != "json") throw UsageError("selftest supports human|json");
    SelftestConfig config;
    if (f.k) config.max_k = f.k;
    if (!f.n.empty()) config.max_n = parse_range(f.n).second;
    config.threads = f.threads == 0 ? 1 : f.threads;
    if (fault == "g")
        config.g_fault = 1;
    else if (!fault.empty())
        throw UsageError("unknown fault: " + fault);

    const auto suites = run_selftest(config);
    Sink sink(f.out, out);
    if (format == "json") {
        for (const auto& s : suites) {
            nlohmann::ordered_json j;
            j["suite"] = s.name;
            j["passed"] = s.passed;
            j["total"] = s.total;
            j["counterexample"] = s.counterexample ? nlohmann::ordered_json(*s.counterexample) : nullptr;
            j["notes"] = s.notes;
            sink.stream() << j.dump() << '\n';
        }
    } else {
        print_selftest(sink.stream(), suites);
    }
    const bool failed = std::any_of(suites.begin(), suites.end(), [](const auto& s) { return s.counterexample; });
    return failed ? ExitCode::mismatch : ExitCode::ok;
}

}  // namespace

std::pair<unsigned, unsigned> parse_range(const std::string& text)
{
    auto to_unsigned = [&](const std::string& part) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad value for --n: '" + text + "'");
        return static_cast<unsigned>(std::stoul(part));
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned v = to_unsigned(text);
        return {v, v};
    }
    const unsigned a = to_unsigned(text.substr(0, dots));
    const unsigned b = to_unsigned(text.substr(dots + 2));
    if (a > b) throw UsageError("empty range for --n: '" + text + "'");
    return {a, b};
}

std::string count_json(const CountResult& r)
{
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["variant"] = std::string(to_string(r.variant));
    j["method"] = std::string(to_string(r.method));
    j["value"] = to_decimal(r.value);
    j["terms"] = to_decimal(r.stats.term_count);
    j["adds"] = std::to_string(r.stats.ops.adds);
    j["mults"] = std::to_string(r.stats.ops.mults);
    j["elapsed_ms"] = round_ms(r.stats.elapsed_ms);
    if (r.extrapolated) j["extrapolated"] = true;
    return j.dump();
}

std::string count_human(const CountResult& r)
{
    std::ostringstream s;
    s << "k: " << r.k << '\n'
      << "n: " << r.n << '\n'
      << "variant: " << to_string(r.variant) << '\n'
      << "method: " << to_string(r.method) << '\n'
      << "value: " << to_decimal(r.value) << '\n'
      << "terms: " << to_decimal(r.stats.term_count) << '\n'
      << "adds: " << r.stats.ops.adds << '\n'
      << "mults: " << r.stats.ops.mults << '\n';
    if (r.extrapolated) s << "note: extrapolated beyond the printed three-row case\n";
    return s.str();
}

std::string count_csv(const CountResult& r)
{
    std::ostringstream s;
    s << r.k << ',' << r.n << ',' << to_string(r.variant) << ',' << to_string(r.method) << ',' << to_decimal(r.value)
      << ',' << to_decimal(r.stats.term_count) << ',' << r.stats.ops.adds << ',' << r.stats.ops.mults << ','
      << fixed3(r.stats.elapsed_ms);
    return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of k x n Latin rectangles by generalized Ryser inclusion-exclusion"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CommonFlags f;
    unsigned expr_max_k = kDefaultExpressionMaxK;
    bool standalone = false;
    unsigned step = 1;
    std::string csv_path;
    std::string halls;
    unsigned oracle_max_k = 0, oracle_max_n = 0;
    std::string fault;

    auto add_k = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--k", f.k, "number of rows")->check(CLI::Range(1u, 64u));
        if (required) o->required();
    };
    auto add_n = [&](CLI::App* c, bool required, const char* help) {
        auto* o = c->add_option("--n", f.n, help);
        if (required) o->required();
    };
    auto add_variant = [&](CLI::App* c) {
        auto* r = c->add_flag("--reduced", f.reduced, "count reduced rectangles (default)");
        auto* t = c->add_flag("--total", f.total, "count all rectangles");
        r->excludes(t);
    };
    auto add_common = [&](CLI::App* c, const char* formats) {
        c->add_option("--format", f.format, formats);
        c->add_option("--out", f.out, "write output to this file");
    };
    auto add_limits = [&](CLI::App* c) {
        c->add_option("--max-terms", f.max_terms, "refuse evaluations with more summation terms")
            ->check(CLI::PositiveNumber);
        c->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    };

    auto* count = app.add_subcommand("count", "count k x n Latin rectangles");
    add_k(count, true);
    add_n(count, true, "number of columns");
    add_variant(count);
    count->add_option("--method", f.method, "formula | oracle | factorial-bridge | direct-L");
    count->add_option("--bracket", f.bracket, "derived | literal (direct-L, k = 2)");
    add_common(count, "human | json | csv");
    add_limits(count);

    auto* expr = app.add_subcommand("expr", "print the inclusion-exclusion expression for R_k(n)");
    add_k(expr, true);
    add_common(expr, "text | latex");
    expr->add_option("--max-k", expr_max_k, "largest k accepted");
    expr->add_flag("--standalone", standalone, "wrap LaTeX output in an article document");

    auto* table = app.add_subcommand("table", "tabulate R_k(n) and L_k(n) over a range of n");
    add_k(table, true);
    add_n(table, true, "range a..b");
    add_common(table, "csv | json | human");
    add_limits(table);

    auto* bench = app.add_subcommand("bench", "count arithmetic operations across an n sweep");
    add_k(bench, true);
    add_n(bench, true, "range a..b");
    bench->add_option("--step", step, "sweep step")->check(CLI::PositiveNumber);
    bench->add_option("--csv", csv_path, "also write the sweep CSV to this file");
    add_common(bench, "csv | json");
    bench->add_option("--max-terms", f.max_terms, "refuse evaluations with more summation terms")
        ->check(CLI::PositiveNumber);
    bench->add_option("--threads", f.threads, "ignored: benchmarks run single-threaded");

    auto* oracle = app.add_subcommand("oracle", "brute-force counts of Latin rectangles or lonely-hall configurations");
    add_k(oracle, true);
    add_n(oracle, true, "number of columns");
    add_variant(oracle);
    oracle->add_option("--halls", halls, "omitted halls ROW:FLOOR,... (rows 2..k); counts lonely-hall configurations");
    oracle->add_option("--max-k", oracle_max_k, "raise the oracle row limit");
    oracle->add_option("--max-n", oracle_max_n, "raise the oracle column limit");
    add_common(oracle, "human | json");

    auto* selftest = app.add_subcommand("selftest", "cross-check every formula against the brute-force oracle");
    add_k(selftest, false);
    add_n(selftest, false, "largest n (or range; the upper end is used)");
    add_common(selftest, "human | json");
    selftest->add_option("--threads", f.threads, "worker threads for formula evaluation");
    selftest->add_option("--inject-fault", fault, "test hook: corrupt a component (g)")->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    }

    try {
        if (count->parsed()) return cmd_count(f, out, err);
        if (expr->parsed()) return cmd_expr(f, expr_max_k, standalone, out);
        if (table->parsed()) return cmd_table(f, out);
        if (bench->parsed()) return cmd_bench(f, step, csv_path, out);
        if (oracle->parsed()) return cmd_oracle(f, halls, oracle_max_k, oracle_max_n, out);
        if (selftest->parsed()) return cmd_selftest(f, fault, out);
    } catch (const ResourceGuardError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::guard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    }
    return ExitCode::usage;
}

}  // namespace latinrect::cli
