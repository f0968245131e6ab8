#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latinrect/column_counts.hpp"
#include "latinrect/enumerator.hpp"
#include "latinrect/expression.hpp"
#include "latinrect/oracle.hpp"
#include "latinrect/partition_lattice.hpp"

namespace py = pybind11;
using namespace latinrect;

namespace {

py::int_ to_py(const BigInt& v)
{
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10)));
}

Profile to_profile(const std::vector<std::int64_t>& counts)
{
    const auto m = static_cast<unsigned>(std::bit_width(counts.size()) - 1);
    if (counts.empty() || (std::size_t{1} << m) != counts.size())
        throw std::invalid_argument("profile length must be a power of two");
    return Profile(m, counts);
}

EvalOptions options(unsigned threads, std::uint64_t max_terms)
{
    EvalOptions o;
    o.threads = threads;
    if (max_terms) o.max_terms = max_terms;
    return o;
}

}  // namespace

PYBIND11_MODULE(_latinrect, m) {
    m.doc() = "Exact Latin rectangle counts via generalized Ryser inclusion-exclusion";

    py::register_exception<ResourceGuardError>(m, "ResourceGuardError", PyExc_RuntimeError);

    m.def("reduced_count",
          [](unsigned k, unsigned n, unsigned threads, std::uint64_t max_terms) {
              BigInt v;
              {
                  py::gil_scoped_release release;
                  v = reduced_count(k, n, options(threads, max_terms)).value;
              }
              return to_py(v);
          },
          py::arg("k"), py::arg("n"), py::arg("threads") = 1, py::arg("max_terms") = 0,
          "Number of k x n Latin rectangles whose first row is 1..n.");
    m.def("total_count",
          [](unsigned k, unsigned n, unsigned threads, std::uint64_t max_terms) {
              return to_py(total_count(k, n, options(threads, max_terms)).value);
          },
          py::arg("k"), py::arg("n"), py::arg("threads") = 1, py::arg("max_terms") = 0,
          "Number of k x n Latin rectangles (n! times the reduced count).");
    m.def("total_count_direct",
          [](unsigned k, unsigned n, const std::string& bracket) {
              return to_py(total_count_direct(k, n, parse_bracket(bracket)).value);
          },
          py::arg("k"), py::arg("n"), py::arg("bracket") = "derived");
    m.def("derangements_classical", [](unsigned n) { return to_py(derangements_classical(n)); });
    m.def("derangements_ryser", [](unsigned n) { return to_py(derangements_ryser(n)); });

    m.def("brute_force_count",
          [](unsigned k, unsigned n, const std::string& variant) {
              return to_py(brute_force_count(k, n, parse_variant(variant)));
          },
          py::arg("k"), py::arg("n"), py::arg("variant") = "reduced");
    m.def("lonely_hall_count",
          [](unsigned k, unsigned n, const std::vector<std::pair<unsigned, unsigned>>& halls) {
              HallSet s;
              for (auto [row, floor] : halls) s.insert({row, floor});
              return to_py(lonely_hall_count(k, n, s));
          },
          py::arg("k"), py::arg("n"), py::arg("halls") = std::vector<std::pair<unsigned, unsigned>>{},
          "Reduced lonely-hall configurations avoiding the given (row, floor) halls.");

    m.def("partitions_of",
          [](unsigned size) {
              std::vector<std::vector<std::vector<unsigned>>> out;
              for (const auto& p : partitions_of(size)) out.push_back(p.blocks());
              return out;
          },
          "Set partitions of {1..m} as lists of blocks, lexicographic on restricted growth strings.");
    m.def("mobius_coefficient", [](const std::vector<unsigned>& rgs) {
        return to_py(mobius_coefficient(SetPartition(rgs)));
    });
    m.def("bell_number", [](unsigned size) { return to_py(bell_number(size)); });

    m.def("g", [](const std::vector<std::int64_t>& t) { return to_py(g(to_profile(t))); },
          "g over a profile given as 2^m class counts in class-index order.");
    m.def("G", [](const std::vector<std::int64_t>& s) { return to_py(G(to_profile(s))); });

    m.def("expression",
          [](unsigned k, const std::string& format) {
              return render(generate_expression(k), parse_render_format(format));
          },
          py::arg("k"), py::arg("format") = "text", "Rendered expression for R_k(n).");
}
