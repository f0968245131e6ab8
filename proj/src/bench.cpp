#include "latinrect/bench.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "latinrect/enumerator.hpp"

namespace latinrect {

CostReport measure(unsigned k, unsigned n, std::uint64_t max_terms)
{
    EvalOptions opts;
    opts.threads = 1;
    opts.instrument = true;
    opts.max_terms = max_terms;
    const CountResult r = reduced_count(k, n, opts);

    CostReport c;
    c.k = k;
    c.n = n;
    c.term_count = r.stats.term_count;
    c.adds = r.stats.ops.adds;
    c.mults_actual = r.stats.ops.mults;
    c.mults_paper_model = r.stats.ops.mults_paper_model();
    c.elapsed_ms = r.stats.elapsed_ms;
    c.value = r.value;
    return c;
}

std::optional<double> fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0) return std::nullopt;
    return sxy / sxx;
}

SweepResult sweep(unsigned k, unsigned n_min, unsigned n_max, unsigned step, std::uint64_t max_terms)
{
    if (n_min > n_max) throw std::invalid_argument("sweep range is empty");
    if (step == 0) throw std::invalid_argument("sweep step must be positive");
    SweepResult out;
    std::vector<double> ns, terms, actual, naive;
    for (unsigned n = n_min; n <= n_max; n += step) {
        CostReport c = measure(k, n, max_terms);
        if (n > 0) {
            ns.push_back(n);
            terms.push_back(static_cast<double>(c.term_count));
            actual.push_back(static_cast<double>(c.total_ops(CostMode::actual)));
            naive.push_back(static_cast<double>(c.total_ops(CostMode::paper_model)));
        }
        out.reports.push_back(std::move(c));
    }
    // zero-op points (n small, k = 1) cannot enter a log-log fit
    auto positive = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double d) { return d > 0; });
    };
    out.terms_exponent = fit_loglog_slope(ns, terms);
    if (positive(actual)) out.actual_exponent = fit_loglog_slope(ns, actual);
    if (positive(naive)) out.paper_model_exponent = fit_loglog_slope(ns, naive);
    return out;
}

namespace {

std::string exponent_text(const std::optional<double>& e)
{
    if (!e) return "absent";
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << *e;
    return s.str();
}

nlohmann::json exponent_json(const std::optional<double>& e)
{
    return e ? nlohmann::json(std::round(*e * 1e4) / 1e4) : nlohmann::json(nullptr);
}

}  // namespace

void write_csv(std::ostream& out, unsigned k, const SweepResult& sweep)
{
    out << "k,n,terms,adds,mults_actual,mults_paper_model,elapsed_ms\n";
    for (const auto& c : sweep.reports) {
        out << c.k << ',' << c.n << ',' << to_decimal(c.term_count) << ',' << c.adds << ',' << c.mults_actual << ','
            << c.mults_paper_model << ',' << std::fixed << std::setprecision(3) << c.elapsed_ms << '\n';
        out.unsetf(std::ios::floatfield);
    }
    out << "# k=" << k << '\n';
    out << "# fitted_exponent_terms=" << exponent_text(sweep.terms_exponent) << '\n';
    out << "# fitted_exponent_actual=" << exponent_text(sweep.actual_exponent) << '\n';
    out << "# fitted_exponent_paper_model=" << exponent_text(sweep.paper_model_exponent) << '\n';
    out << "# cost_model=one unit per big-integer add/sub/mul/div regardless of operand size\n";
}

void write_json_lines(std::ostream& out, unsigned k, const SweepResult& sweep)
{
    for (const auto& c : sweep.reports) {
        nlohmann::ordered_json j;
        j["k"] = c.k;
        j["n"] = c.n;
        j["terms"] = to_decimal(c.term_count);
        j["adds"] = std::to_string(c.adds);
        j["mults_actual"] = std::to_string(c.mults_actual);
        j["mults_paper_model"] = std::to_string(c.mults_paper_model);
        j["elapsed_ms"] = std::round(c.elapsed_ms * 1000) / 1000;
        out << j.dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["k"] = k;
    summary["fitted_exponent_terms"] = exponent_json(sweep.terms_exponent);
    summary["fitted_exponent_actual"] = exponent_json(sweep.actual_exponent);
    summary["fitted_exponent_paper_model"] = exponent_json(sweep.paper_model_exponent);
    out << summary.dump() << '\n';
}

}  // namespace latinrect
