#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gainarr/charpoly.hpp"
#include "gainarr/cli.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/freeness.hpp"
#include "gainarr/io.hpp"
#include "gainarr/lowdim.hpp"
#include "gainarr/signed.hpp"
#include "gainarr/version.hpp"

namespace py = pybind11;
using namespace gainarr;

namespace {

ArrangementKind parse_kind(const std::string& s) {
  if (s == "affinographic") return ArrangementKind::Affinographic;
  if (s == "cone") return ArrangementKind::ConeAffinographic;
  if (s == "bias") return ArrangementKind::Bias;
  fail(ErrorKind::InvalidArgument, "kind must be affinographic, cone or bias, got '" + s + "'");
}

FreenessMode parse_mode(const std::string& s) {
  if (s == "if") return FreenessMode::InductiveAlongEdges;
  if (s == "df") return FreenessMode::DivisionalAlongEdges;
  fail(ErrorKind::InvalidArgument, "mode must be 'if' or 'df', got '" + s + "'");
}

using Edge = std::tuple<Vertex, Vertex, Gain>;

std::vector<Edge> edge_list(const GainGraph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) out.emplace_back(e.i, e.j, e.g);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gainarr, m) {
  m.doc() = "Gain graphs, their hyperplane arrangements and freeness checks";
  m.attr("__version__") = version;

  py::register_exception<Error>(m, "GainarrError", PyExc_ValueError);

  py::class_<GainGraph>(m, "GainGraph")
      .def(py::init([](int n, std::uint32_t p) {
             return GainGraph::with_vertices(p == 0 ? GainGroup::integers() : GainGroup::mod(p), n);
           }),
           py::arg("n"), py::arg("p") = 0, "Edgeless graph on 1..n over Z (p = 0) or Z/pZ.")
      .def(py::init([](int n, std::uint32_t p, const std::vector<Edge>& edges) {
             GainGraph g = GainGraph::with_vertices(p == 0 ? GainGroup::integers() : GainGroup::mod(p), n);
             for (const auto& [i, j, x] : edges) g.add_edge(i, j, x);
             return g;
           }),
           py::arg("n"), py::arg("p"), py::arg("edges"))
      .def(
          "add_edge", [](GainGraph& g, Vertex i, Vertex j, Gain x) -> GainGraph& { return g.add_edge(i, j, x); },
          py::arg("i"), py::arg("j"), py::arg("g"), py::return_value_policy::reference_internal)
      .def_property_readonly("p", [](const GainGraph& g) { return g.group().p; })
      .def_property_readonly("vertices", &GainGraph::vertices)
      .def_property_readonly("edges", &edge_list)
      .def("__len__", &GainGraph::num_edges)
      .def("contract", [](const GainGraph& g, Vertex i, Vertex j, Gain x) { return contract_edge(g, {i, j, x}); })
      .def("delete", [](const GainGraph& g, Vertex i, Vertex j, Gain x) { return delete_edge(g, {i, j, x}); })
      .def("to_text", &write_graph_text)
      .def_static("from_text", [](const std::string& text) { return parse_graph_text(text).graph; })
      .def("__eq__", [](const GainGraph& a, const GainGraph& b) { return a == b; })
      .def("__repr__", &GainGraph::to_string);

  m.def(
      "chi",
      [](const GainGraph& g, const std::string& kind, const std::string& method) {
        const ArrangementKind k = parse_kind(kind);
        if (method == "poset") return chi_poset(build_arrangement(g, k)).coefficients();
        if (method != "recursion") fail(ErrorKind::InvalidArgument, "method must be recursion or poset");
        return chi_gaingraph_recursive(g, k).coefficients();
      },
      py::arg("graph"), py::arg("kind") = "bias", py::arg("method") = "recursion",
      "Characteristic polynomial coefficients, constant term first.");
  m.def(
      "chi_string",
      [](const GainGraph& g, const std::string& kind) {
        return chi_gaingraph_recursive(g, parse_kind(kind)).to_factored_string();
      },
      py::arg("graph"), py::arg("kind") = "bias");
  m.def(
      "is_free",
      [](const GainGraph& g, const std::string& kind, const std::string& mode, std::size_t node_cap) {
        return free_along_edges(g, parse_kind(kind), parse_mode(mode), node_cap);
      },
      py::arg("graph"), py::arg("kind") = "bias", py::arg("mode") = "if", py::arg("node_cap") = 100000);
  m.def(
      "_certificate",
      [](const GainGraph& g, const std::string& kind, const std::string& mode) {
        return to_json(decide_along_edges(g, parse_kind(kind), parse_mode(mode))).dump();
      },
      py::arg("graph"), py::arg("kind"), py::arg("mode"));
  m.def("signed_predicates", [](const GainGraph& g) {
    const SignedGraphView s(g);
    return std::map<std::string, bool>{{"balanced_chordal", is_balanced_chordal(s)},
                                       {"induced_unbalanced_cycle", has_induced_unbalanced_cycle(s)},
                                       {"switching_obstruction", has_switching_obstruction(s)},
                                       {"criterion", signed_freeness_criterion(s)}};
  });
  m.def(
      "family", [](const std::string& kind, int l, int m_) { return make_family(parse_family_kind(kind), l, m_); },
      py::arg("kind"), py::arg("l"), py::arg("m") = 0);
  m.def("raney", [](int l, int s, int r) { return py::int_(py::str(raney(l, s, r).get_str())); });
  m.def("exp2_lines", [](const std::vector<int>& mults) {
    const Exp2 e = exp2_solver(lines_multiarrangement(mults));
    return std::make_pair(e.d1, e.d2);
  });
  m.def("exp2_q_powers", [](int s, int t, const std::vector<Gain>& gains) {
    const Exp2 e = exp2_solver(q_power_multiarrangement(s, t, gains));
    return std::make_pair(e.d1, e.d2);
  });
  m.def("_free3", [](const GainGraph& g) {
    const Coincidence3 r = coincidence_3dim(g);
    return Json{{"cone", to_json(r.cone)}, {"bias", to_json(r.bias)}}.dump();
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
