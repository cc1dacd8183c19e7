#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gainarr/cli.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/io.hpp"

using namespace gainarr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_graph(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gainarr_test_" + name + ".txt");
  std::ofstream(path) << text;
  return path.string();
}

int parse_error_line(const std::string& text) {
  try {
    parse_graph_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_graph_text") {
  const ParsedGraph p = parse_graph_text("# comment\ngroup Z\n\nvertices 3\nedge 1 2 0  # trailing\nedge 3 2 1\n");
  CHECK(p.graph.num_vertices() == 3);
  CHECK(p.graph.edges() == std::vector<EdgeClass>{{1, 2, 0}, {2, 3, -1}});
  CHECK(p.warnings.empty());

  const ParsedGraph f = parse_graph_text("group F 2\nvertices 2\nedge 1 2 3\n");
  CHECK(f.graph.group() == GainGroup::mod(2));
  CHECK(f.graph.edges()[0].g == 1);
  CHECK(f.warnings.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("group Q\n") == 1);
  CHECK(parse_error_line("group F 4\nvertices 2\n") == 1);
  CHECK(parse_error_line("group Z\nvertices x\n") == 2);
  CHECK(parse_error_line("group Z\nvertices 2\nedge 1 3 0\n") == 3);
  CHECK(parse_error_line("group Z\nvertices 2\nedge 1 1 0\n") == 3);
  CHECK(parse_error_line("group Z\nvertices 2\nedge 1 2\n") == 3);
  CHECK(parse_error_line("group Z\n") == 2);
  CHECK(parse_error_line("") == 1);
}

TEST_CASE("write_graph_text round trip") {
  for (const GainGraph& g : {example_gain_graph(), make_family(FamilyKind::Dms, 3, 2), unbalanced_triangle()}) {
    CHECK(parse_graph_text(write_graph_text(g)).graph == g);
  }
  GainGraph s = GainGraph::with_vertices(GainGroup::mod(2), 3);
  s.add_edge(1, 2, 1).add_edge(2, 3, 0);
  CHECK(parse_graph_text(write_graph_text(s)).graph == s);
}

TEST_CASE("cli chi") {
  const Run edgeless = run({"chi", temp_graph("edgeless", "group Z\nvertices 2\n")});
  REQUIRE(edgeless.code == ExitPass);
  Json j = edgeless.json();
  CHECK(j["tool"] == "gainarr");
  CHECK(j["chiA"]["string"] == "t^2");
  CHECK(j["chiB"]["factored"] == "(t - 1)^2");
  CHECK(j["lemmaCheck"] == true);

  const Run one = run({"chi", temp_graph("one", "group Z\nvertices 2\nedge 1 2 0\n")});
  REQUIRE(one.code == ExitPass);
  j = one.json();
  CHECK(j["chiA"]["factored"] == "t*(t - 1)");
  CHECK(j["chiB"]["factored"] == "(t - 1)*(t - 2)");
  CHECK(j["posetCheck"] == true);

  const Run tri = run({"chi", temp_graph("tri", "group F 2\nvertices 3\nedge 1 2 0\nedge 2 3 0\nedge 1 3 1\n")});
  REQUIRE(tri.code == ExitPass);
  CHECK(tri.json()["chiA"]["coefficients"] == Json::array({0, 3, -3, 1}));
}

TEST_CASE("cli free") {
  const std::string star = temp_graph("star", "group Z\nvertices 3\nedge 1 2 0\nedge 1 2 1\nedge 1 3 0\nedge 1 3 1\nedge 2 3 0\n");
  Run r = run({"free", star, "--mode", "if-edges"});
  REQUIRE(r.code == ExitPass);
  Json j = r.json();
  CHECK(j["cone"]["verdict"] == "yes");
  CHECK(j["bias"]["verdict"] == "yes");
  CHECK(j["bias"]["replayed"] == true);
  CHECK(j["agree"] == true);

  const std::string path = temp_graph("path", "group Z\nvertices 3\nedge 1 2 0\nedge 1 2 1\nedge 2 3 0\nedge 2 3 1\nedge 1 3 0\n");
  r = run({"free", path});
  REQUIRE(r.code == ExitPass);
  CHECK(r.json()["bias"]["verdict"] == "no");
  CHECK(r.json()["cone"]["verdict"] == "no");

  const std::string tri = temp_graph("signed_tri", "group F 2\nvertices 3\nedge 1 2 0\nedge 2 3 0\nedge 1 3 1\n");
  r = run({"free", tri, "--mode", "signed"});
  REQUIRE(r.code == ExitPass);
  CHECK(r.json()["verdict"] == "no");
  CHECK(r.json()["predicates"]["inducedUnbalancedCycle"] == true);

  const std::string cat = temp_graph("cat", write_graph_text(make_family(FamilyKind::Catalan, 3, 1)));
  r = run({"free3", cat});
  REQUIRE(r.code == ExitPass);
  CHECK(r.json()["bias"]["exponents"] == Json::array({1, 5, 6}));
  CHECK(run({"free", cat, "--mode", "free3"}).code == ExitPass);
  CHECK(run({"free3", tri}).code == ExitUsage);
}

TEST_CASE("cli signed-check") {
  const std::string k3 = temp_graph("k3", "group F 2\nvertices 3\nedge 1 2 0\nedge 2 3 0\nedge 1 3 0\nedge 1 2 1\n");
  const Run r = run({"signed-check", k3});
  REQUIRE(r.code == ExitPass);
  const Json p = r.json()["predicates"];
  CHECK(p["positiveComplete"] == true);
  CHECK(p["negativeThreshold"] == true);
  CHECK(p["edelmanReiner"] == p["criterion"]);
}

TEST_CASE("cli family") {
  const Run r = run({"family", "shi", "--l", "3", "--m", "1"});
  REQUIRE(r.code == ExitPass);
  CHECK(parse_graph_text(r.out).graph == make_family(FamilyKind::Shi, 3, 1));
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == ExitUsage);
  CHECK(run({"chi"}).code == ExitUsage);
  CHECK(run({"frobnicate"}).code == ExitUsage);
  CHECK(run({"free", "x", "--mode", "bogus"}).code == ExitUsage);
  CHECK(run({"--help"}).code == ExitPass);
  const Run missing = run({"chi", "/nonexistent/graph.txt"});
  CHECK(missing.code == ExitUsage);
  CHECK(missing.err.find("error:") != std::string::npos);
  const Run bad = run({"chi", temp_graph("bad", "group Z\nvertices 2\nedge 1 2\n")});
  CHECK(bad.code == ExitUsage);
  CHECK(bad.err.find("line 3") != std::string::npos);
  const std::string big = temp_graph("big", write_graph_text(make_family(FamilyKind::Coxeter, 6)));
  CHECK(run({"--max-vertices", "5", "chi", big}).code == ExitBound);
  CHECK(run({"--node-cap", "2", "free", temp_graph("cat4", write_graph_text(make_family(FamilyKind::Catalan, 4, 1)))})
            .code == ExitBound);
  CHECK(run({"signed-check", big}).code == ExitUsage);
}

TEST_CASE("cli tsv output") {
  const Run r = run({"--format", "tsv", "chi", temp_graph("tsv", "group Z\nvertices 2\nedge 1 2 0\n")});
  REQUIRE(r.code == ExitPass);
  CHECK(r.out.find("lemmaCheck\ttrue") != std::string::npos);
}
