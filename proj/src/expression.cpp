#include "latinrect/expression.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

#include "latinrect/enumerator.hpp"
#include "latinrect/partition_lattice.hpp"

namespace latinrect {

namespace {

std::string class_bits(unsigned m, ClassIndex v)
{
    return ClassVector(m, v).to_string();
}

std::string block_label(std::uint32_t block, std::string_view separator)
{
    std::string out;
    for (unsigned i = 0; i < 32; ++i) {
        if (!((block >> i) & 1u)) continue;
        if (!out.empty()) out += separator;
        out += std::to_string(i + 1);
    }
    return out;
}

struct Style {
    bool latex;

    std::string symbol(char letter, unsigned m, ClassIndex v) const
    {
        const std::string bits = class_bits(m, v);
        return latex ? std::string(1, letter) + "_{" + bits + "}" : std::string(1, letter) + bits;
    }

    std::string f(std::uint32_t block) const
    {
        return latex ? "f_{" + block_label(block, ",") + "}" : "f{" + block_label(block, ",") + "}";
    }

    std::string times() const { return latex ? " " : "*"; }
};

std::string render_affine(const AffineForm& a, const Expression& e, const Style& st)
{
    std::string out;
    for (const auto& t : a.terms) {
        if (!out.empty()) out += t.coefficient < 0 ? "-" : "+";
        else if (t.coefficient < 0) out += "-";
        const std::int64_t c = t.coefficient < 0 ? -t.coefficient : t.coefficient;
        if (c != 1) out += std::to_string(c) + (st.latex ? "" : "*");
        out += st.symbol('s', e.m, t.symbol);
    }
    if (a.constant != 0 || out.empty()) {
        if (!out.empty() && a.constant > 0) out += "+";
        out += std::to_string(a.constant);
    }
    return out;
}

std::string render_sum_head(const Expression& e, const Style& st)
{
    std::string constraint;
    for (std::size_t v = 0; v < e.summation_indices.size(); ++v) {
        if (v) constraint += "+";
        constraint += st.symbol('s', e.m, static_cast<ClassIndex>(v));
    }
    constraint += "=n";
    return st.latex ? "\\sum_{" + constraint + "}" : "sum over " + constraint + " of";
}

std::string render_sign(const Expression& e, const Style& st)
{
    const std::string exponent = render_affine(e.sign_exponent, e, st);
    if (st.latex) return "(-1)^{" + exponent + "}";
    return e.sign_exponent.terms.size() == 1 && e.sign_exponent.terms[0].coefficient == 1
               ? "(-1)^" + exponent
               : "(-1)^(" + exponent + ")";
}

std::string render_multinomial(const Expression& e, const Style& st)
{
    std::string parts;
    for (ClassIndex v : e.multinomial_parts) {
        if (!parts.empty()) parts += st.latex ? "," : ", ";
        parts += st.symbol('s', e.m, v);
    }
    return st.latex ? "{n \\choose " + parts + "}" : "multinomial(n; " + parts + ")";
}

std::string render_factor(const PowerFactor& f, const Expression& e, const Style& st)
{
    std::string args;
    for (const auto& a : f.arguments) {
        if (!args.empty()) args += st.latex ? "," : ", ";
        args += render_affine(a, e, st);
    }
    const std::string exponent = st.symbol('s', e.m, f.exponent);
    return st.latex ? "g(" + args + ")^{" + exponent + "}" : "g(" + args + ")^" + exponent;
}

std::string render_g_definition(const Expression& e, const Style& st)
{
    std::string params;
    for (std::size_t v = 0; v < e.summation_indices.size(); ++v) {
        if (v) params += st.latex ? "," : ", ";
        params += st.symbol('t', e.m, static_cast<ClassIndex>(v));
    }
    std::string body;
    for (const auto& term : e.g_expansion) {
        const bool negative = term.coefficient < 0;
        const BigInt magnitude = negative ? BigInt(-term.coefficient) : term.coefficient;
        if (body.empty())
            body += negative ? "-" : "";
        else
            body += negative ? " - " : " + ";
        if (magnitude != 1) body += to_decimal(magnitude) + st.times();
        for (std::size_t i = 0; i < term.blocks.size(); ++i) {
            if (i) body += st.times();
            body += st.f(term.blocks[i]);
        }
    }
    return "g(" + params + ") = " + body;
}

std::string render_block_sum(const BlockSum& b, const Expression& e, const Style& st)
{
    std::string rhs;
    for (ClassIndex v : b.parameters) {
        if (!rhs.empty()) rhs += st.latex ? "+" : " + ";
        rhs += st.symbol('t', e.m, v);
    }
    return st.f(b.block) + " = " + rhs;
}

std::string render_text(const Expression& e)
{
    const Style st{false};
    std::ostringstream out;
    out << "R_" << e.k << "(n) = " << render_sum_head(e, st) << ' ' << render_sign(e, st) << " * "
        << render_multinomial(e, st);
    for (const auto& f : e.factors) out << " * " << render_factor(f, e, st);
    out << "\nwhere\n  " << render_g_definition(e, st) << '\n';
    for (const auto& b : e.block_sums) out << "  " << render_block_sum(b, e, st) << '\n';
    return out.str();
}

std::string render_latex(const Expression& e)
{
    const Style st{true};
    std::ostringstream out;
    out << "\\[\nR_{" << e.k << "}(n) = " << render_sum_head(e, st) << ' ' << render_sign(e, st) << ' '
        << render_multinomial(e, st);
    for (const auto& f : e.factors) out << "\n  \\cdot " << render_factor(f, e, st);
    out << "\n\\]\nwhere\n\\[\n" << render_g_definition(e, st) << "\n\\]\n";
    for (const auto& b : e.block_sums) out << "\\[\n" << render_block_sum(b, e, st) << "\n\\]\n";
    return out.str();
}

}  // namespace

std::int64_t AffineForm::evaluate(std::span<const std::int64_t> values) const
{
    std::int64_t r = constant;
    for (const auto& t : terms) r += t.coefficient * values[t.symbol];
    return r;
}

RenderFormat parse_render_format(std::string_view name)
{
    if (name == "text") return RenderFormat::text;
    if (name == "latex") return RenderFormat::latex;
    throw std::invalid_argument("unknown expression format: " + std::string(name));
}

Expression generate_expression(unsigned k, unsigned max_k)
{
    if (k < 2)
        throw std::invalid_argument("R_1(n) = 1 for every n; expressions are generated for k >= 2");
    if (k > max_k)
        throw std::invalid_argument("k=" + std::to_string(k) + " exceeds the expression ceiling of " +
                                    std::to_string(max_k));

    Expression e;
    e.k = k;
    e.m = k - 1;
    const ClassIndex classes = ClassIndex{1} << e.m;
    const ClassIndex ones = classes - 1;

    for (ClassIndex v = 0; v < classes; ++v) {
        e.summation_indices.push_back("s" + class_bits(e.m, v));
        e.multinomial_parts.push_back(v);
        if (const auto w = std::popcount(v); w > 0) e.sign_exponent.terms.push_back({w, v});
    }

    for (ClassIndex v = 0; v < classes; ++v) {
        PowerFactor f{v, {}};
        for (ClassIndex u = 0; u < classes; ++u) {
            AffineForm a{{{1, u}}, 0};
            if (v != ones && u == v) a.constant = -1;
            if (v != ones && u == ones) a.constant = 1;
            f.arguments.push_back(std::move(a));
        }
        e.factors.push_back(std::move(f));
    }

    const auto partitions = partitions_of(e.m);
    for (auto it = partitions.rbegin(); it != partitions.rend(); ++it) {
        auto masks = it->block_masks();
        e.g_expansion.push_back({mobius_coefficient(*it), {masks.begin(), masks.end()}});
    }

    std::vector<std::uint32_t> blocks;
    for (std::uint32_t b = 1; b < classes; ++b) blocks.push_back(b);
    std::stable_sort(blocks.begin(), blocks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        // lexicographic on the sorted element lists = reversed bit order comparison
        for (unsigned i = 0; i < 32; ++i) {
            const bool ia = (a >> i) & 1u, ib = (b >> i) & 1u;
            if (ia != ib) return ia;
        }
        return false;
    });
    for (std::uint32_t b : blocks) {
        BlockSum sum{b, {}};
        for (ClassIndex v = 0; v < classes; ++v)
            if ((v & b) == 0) sum.parameters.push_back(v);
        e.block_sums.push_back(std::move(sum));
    }
    return e;
}

std::string render(const Expression& e, RenderFormat format)
{
    return format == RenderFormat::latex ? render_latex(e) : render_text(e);
}

BigInt evaluate_expression(const Expression& e, unsigned n)
{
    return evaluate_expression(e, n, default_max_terms());
}

BigInt evaluate_expression(const Expression& e, unsigned n, std::uint64_t max_terms)
{
    const BigInt predicted = composition_count(n, e.m);
    if (predicted > max_terms)
        throw ResourceGuardError("expression for k=" + std::to_string(e.k) + " at n=" + std::to_string(n) +
                                     " needs " + to_decimal(predicted) + " terms",
                                 predicted);

    std::vector<std::optional<std::size_t>> sum_of_block(std::size_t{1} << e.m);
    for (std::size_t i = 0; i < e.block_sums.size(); ++i) sum_of_block[e.block_sums[i].block] = i;

    auto eval_g = [&](std::span<const std::int64_t> t) {
        BigInt acc = 0;
        for (const auto& term : e.g_expansion) {
            BigInt product = term.coefficient;
            for (std::uint32_t b : term.blocks) {
                std::int64_t f = 0;
                for (ClassIndex v : e.block_sums.at(*sum_of_block.at(b)).parameters) f += t[v];
                product *= f;
            }
            acc += product;
        }
        return acc;
    };

    const FactorialTable table(n);
    BigInt total = 0;
    std::vector<std::int64_t> args(std::size_t{1} << e.m);
    CompositionCursor cursor(n, e.m);
    do {
        const auto s = cursor.current().counts();
        BigInt term = multinomial(cursor.current(), table);
        for (const auto& f : e.factors) {
            const std::int64_t exponent = s[f.exponent];
            if (exponent == 0) continue;
            for (std::size_t u = 0; u < f.arguments.size(); ++u) args[u] = f.arguments[u].evaluate(s);
            term *= boost::multiprecision::pow(eval_g(args), static_cast<unsigned>(exponent));
        }
        if (e.sign_exponent.evaluate(s) % 2 == 0)
            total += term;
        else
            total -= term;
    } while (cursor.next());
    return total;
}

}  // namespace latinrect
