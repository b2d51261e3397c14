#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amg/cube_props.hpp"
#include "amg/errors.hpp"
#include "amg/explore.hpp"
#include "amg/metrics.hpp"
#include "amg/sequences.hpp"
#include "amg/serialize.hpp"
#include "amg/verify.hpp"

namespace py = pybind11;
using namespace amg;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ big(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }

Family fam(const std::string& f) { return parse_family(f); }

BitString word(const std::string& s) { return BitString::parse(s); }

std::vector<std::string> words(const std::vector<BitString>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypercube subfamily graphs";

  py::register_exception<ExcludedStringError>(m, "ExcludedStringError", PyExc_ValueError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);
  py::register_exception<DisconnectedGraph>(m, "DisconnectedGraph", PyExc_RuntimeError);

  m.def("fib", [](int n) { return big(fib(n)); }, py::arg("n"));
  m.def("lucas", [](int n) { return big(lucas(n)); }, py::arg("n"));
  m.def("assoc_mersenne", [](int n) { return big(assoc_mersenne(n)); }, py::arg("n"));
  m.def("lucas_from_fib", [](int n, int k) { return big(lucas_from_fib(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("edge_count_closed", [](int n) { return big(edge_count_M_closed(n)); }, py::arg("n"));
  m.def(
      "edge_gf_coeffs",
      [](int max_n) {
        py::list out;
        for (const auto& c : edge_gf_coeffs(max_n)) out.append(big(c));
        return out;
      },
      py::arg("max_n"));

  m.def("is_member", [](const std::string& f, const std::string& s) { return is_member(fam(f), word(s)); }, py::arg("family"), py::arg("word"));
  m.def("hamming", [](const std::string& a, const std::string& b) { return hamming(word(a), word(b)); });
  m.def("weight", [](const std::string& s) { return weight(word(s)); });
  m.def("enumerate", [](const std::string& f, int n) { return words(enumerate(fam(f), n).members); }, py::arg("family"), py::arg("n"));
  m.def("build_R_recursive", [](int n) { return words(build_R_recursive(n).members); }, py::arg("n"));
  m.def("build_M_recursive", [](int n) { return words(build_M_recursive(n).members); }, py::arg("n"));
  m.def("phi", [](const std::string& s) { return phi(word(s)).str(); });
  m.def("phi_inverse", [](const std::string& s) { return phi_inverse(word(s)).str(); });
  m.def("far_vertex", [](const std::string& s) { return far_vertex(word(s)).str(); });
  m.def("monotone_path", [](const std::string& a, const std::string& b) { return words(monotone_path(word(a), word(b))); });
  m.def("majority", [](const std::string& a, const std::string& b, const std::string& c) {
    return majority(word(a), word(b), word(c)).str();
  });

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("family", [](const Graph& g) { return std::string(family_name(g.family)); })
      .def_readonly("n", &Graph::n)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", [](const Graph& g) { return edge_count(g); })
      .def_property_readonly("vertices", [](const Graph& g) { return words(g.vertices.members); })
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (VertexId u = 0; u < g.order(); ++u) {
                                 for (VertexId v : g.adjacency[u]) {
                                   if (v > u) out.emplace_back(g.label(u).str(), g.label(v).str());
                                 }
                               }
                               return out;
                             })
      .def("degree_sequence", &degree_sequence)
      .def("to_dot", &export_dot)
      .def("to_json", [](const Graph& g) { return to_python(to_json(g)); })
      .def("metrics", [](const Graph& g, bool verbose) { return to_python(to_json(metric_summary(g), g, verbose)); },
           py::arg("verbose") = false)
      .def("isometry", [](const Graph& g) { return to_python(to_json(is_isometric_subgraph(g))); })
      .def("median_closed", [](const Graph& g) { return to_python(to_json(is_median_closed(g))); })
      .def("median_graph", [](const Graph& g) { return to_python(to_json(is_median_graph(g))); })
      .def("cube_polynomial", [](const Graph& g) { return cube_polynomial(g).coefficients; })
      .def("hamiltonian_path",
           [](const Graph& g, std::uint64_t budget) { return to_python(to_json(hamiltonian_path(g, budget))); },
           py::arg("budget") = kDefaultSearchBudget)
      .def("hamiltonian_cycle",
           [](const Graph& g, std::uint64_t budget) { return to_python(to_json(hamiltonian_cycle(g, budget))); },
           py::arg("budget") = kDefaultSearchBudget)
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::string(family_name(g.family)) + " n=" + std::to_string(g.n) + " |V|=" +
               std::to_string(g.order()) + " |E|=" + std::to_string(edge_count(g)) + ">";
      });

  m.def("build_graph", [](const std::string& f, int n) { return build_graph(fam(f), n); }, py::arg("family"), py::arg("n"));
  m.def("class_neighbors", [](int n) { return to_python(to_json(verify_class_neighbors(n))); }, py::arg("n"));
  m.def("predicted_periphery", [](int n) {
    auto [d, p] = predicted_periphery(n);
    return std::make_pair(d, words(p));
  });

  m.def(
      "verify",
      [](const std::string& selector, int lo, int hi) {
        std::vector<std::tuple<std::string, std::string, int, std::string>> out;
        for (const auto& line : run_checks(resolve_checks(selector), lo, hi)) {
          out.emplace_back(std::string(status_name(line.outcome.status)), std::string(line.check->id), line.n,
                           line.outcome.detail);
        }
        return out;
      },
      py::arg("selector"), py::arg("lo"), py::arg("hi"));
}
