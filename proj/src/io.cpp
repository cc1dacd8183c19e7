#include "gainarr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gainarr/error.hpp"

namespace gainarr {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::int64_t parse_int(const std::string& s, int line, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + s + "'");
  }
  return v;
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::optional<GainGroup> group;
  std::optional<GainGraph> graph;
  std::vector<std::string> warnings;
  int n = 0;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!group) {
      if (tok[0] != "group") throw ParseError(lineno, "expected 'group Z' or 'group F <p>'");
      if (tok.size() == 2 && tok[1] == "Z") {
        group = GainGroup::integers();
      } else if (tok.size() == 3 && tok[1] == "F") {
        const std::int64_t p = parse_int(tok[2], lineno, "modulus");
        if (p < 2 || p > 1'000'003 || !is_prime(static_cast<std::uint64_t>(p))) {
          throw ParseError(lineno, "modulus must be a prime, got " + tok[2]);
        }
        group = GainGroup::mod(static_cast<std::uint32_t>(p));
      } else {
        throw ParseError(lineno, "expected 'group Z' or 'group F <p>'");
      }
      continue;
    }
    if (!graph) {
      if (tok.size() != 2 || tok[0] != "vertices") throw ParseError(lineno, "expected 'vertices <n>'");
      const std::int64_t v = parse_int(tok[1], lineno, "vertex count");
      if (v < 0 || v > 64) throw ParseError(lineno, "vertex count must be between 0 and 64");
      n = static_cast<int>(v);
      graph = GainGraph::with_vertices(*group, n);
      continue;
    }
    if (tok.size() != 4 || tok[0] != "edge") throw ParseError(lineno, "expected 'edge <i> <j> <g>'");
    const std::int64_t i = parse_int(tok[1], lineno, "vertex");
    const std::int64_t j = parse_int(tok[2], lineno, "vertex");
    const std::int64_t g = parse_int(tok[3], lineno, "gain");
    if (i < 1 || i > n || j < 1 || j > n) throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
    if (i == j) throw ParseError(lineno, "loop edge at vertex " + std::to_string(i));
    if (!group->is_integers() && (g < 0 || g >= static_cast<std::int64_t>(group->p))) {
      warnings.push_back("line " + std::to_string(lineno) + ": gain " + std::to_string(g) + " reduced mod " +
                         std::to_string(group->p) + " to " + std::to_string(group->reduce(g)));
    }
    graph->add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), g);
  }
  if (!group) throw ParseError(lineno + 1, "missing 'group' line");
  if (!graph) throw ParseError(lineno + 1, "missing 'vertices' line");
  return {std::move(*graph), std::move(warnings)};
}

GainGraph parse_graph_file(const std::string& text) { return parse_graph_text(text).graph; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string write_graph_text(const GainGraph& g) {
  std::ostringstream out;
  out << "group " << (g.group().is_integers() ? std::string("Z") : "F " + std::to_string(g.group().p)) << '\n';
  out << "vertices " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << g.index_of(e.i) + 1 << ' ' << g.index_of(e.j) + 1 << ' ' << e.g << '\n';
  }
  return out.str();
}

Json to_json(const IntPolynomial& p) {
  return Json{{"coefficients", p.coefficients()}, {"string", p.to_string()}, {"factored", p.to_factored_string()}};
}

Json to_json(const GainGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.i, e.j, e.g});
  return Json{{"group", g.group().name()}, {"vertices", g.vertices()}, {"edges", edges}};
}

Json to_json(const Arrangement& a) {
  Json hs = Json::array();
  for (const auto& h : a.hyperplanes()) {
    Json coeffs = Json::array();
    for (const auto& c : h.coeffs()) coeffs.push_back(c.to_string());
    hs.push_back({{"coefficients", coeffs}, {"constant", h.constant().to_string()}});
  }
  return Json{{"dimension", a.dim()}, {"domain", a.domain().name()}, {"hyperplanes", hs}};
}

namespace {

Json edge_json(const EdgeClass& e) { return Json::array({e.i, e.j, e.g}); }

}  // namespace

Json to_json(const FreenessCertificate& c) {
  Json out{{"verdict", c.verdict ? "yes" : "no"},
           {"arrangement", kind_name(c.kind)},
           {"mode", mode_name(c.mode)},
           {"chi", c.chi}};
  out["exponents"] = c.exponents ? Json(*c.exponents) : Json(nullptr);
  if (c.verdict) {
    Json steps = Json::array();
    for (const auto& s : c.witness) {
      Json j{{"graph", to_json(s.graph)}, {"chi", s.chi}};
      if (s.edge) {
        j["edge"] = edge_json(*s.edge);
        j["chi_contraction"] = s.chi_contraction;
        j["contraction"] = *s.contraction;
        if (s.deletion) {
          j["chi_deletion"] = s.chi_deletion;
          j["deletion"] = *s.deletion;
        }
      }
      steps.push_back(std::move(j));
    }
    out["witness"] = std::move(steps);
  } else {
    out["reason"] = refutation_name(c.reason);
    Json rej = Json::array();
    for (const auto& r : c.rejections) rej.push_back({{"edge", edge_json(r.edge)}, {"reason", refutation_name(r.reason)}});
    out["rejections"] = std::move(rej);
  }
  out["nodes"] = c.nodes;
  return out;
}

Json to_json(const Free3Result& r) {
  Json out{{"free", r.free}, {"chi", r.chi}};
  out["exponents"] = r.exponents ? Json(*r.exponents) : Json(nullptr);
  out["ziegler_exponents"] = r.ziegler ? Json::array({r.ziegler->d1, r.ziegler->d2}) : Json(nullptr);
  if (!r.free) out["reason"] = r.reason;
  return out;
}

}  // namespace gainarr
