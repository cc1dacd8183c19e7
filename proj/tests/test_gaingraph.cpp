#include "doctest.h"
#include "gainarr/arrangement.hpp"
#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/gain_graph.hpp"

using namespace gainarr;

namespace {

GainGraph zgraph(int n, std::initializer_list<EdgeClass> edges) {
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), n);
  for (const auto& e : edges) g.add_edge(e.i, e.j, e.g);
  return g;
}

}  // namespace

TEST_CASE("normalize_edge") {
  CHECK(normalize_edge(2, 1, 3) == EdgeClass{1, 2, -3});
  CHECK(normalize_edge(1, 2, 0) == EdgeClass{1, 2, 0});
  CHECK(normalize_edge(3, 1, 1, GainGroup::mod(2)) == EdgeClass{1, 3, 1});
  CHECK(normalize_edge(1, 2, 7, GainGroup::mod(5)) == EdgeClass{1, 2, 2});
  CHECK_THROWS_AS(normalize_edge(1, 1, 0), Error);
  CHECK_THROWS_AS(GainGroup::mod(6), Error);
}

TEST_CASE("edge classes collapse orientations") {
  GainGraph g = zgraph(2, {});
  g.add_edge(1, 2, 1).add_edge(2, 1, -1);
  CHECK(g.num_edges() == 1);
  CHECK(g.gains_between(2, 1) == std::vector<Gain>{-1});
}

TEST_CASE("delete_edge") {
  const GainGraph tri = zgraph(3, {{1, 2, 0}, {2, 3, 0}, {1, 3, 0}});
  const GainGraph path = delete_edge(tri, {1, 2, 0});
  CHECK(path == zgraph(3, {{1, 3, 0}, {2, 3, 0}}));
  CHECK(delete_edge(zgraph(2, {{1, 2, 0}}), {1, 2, 0}).num_edges() == 0);
  const GainGraph fig = example_gain_graph();
  CHECK(fig.num_edges() == 6);
  CHECK(delete_edge(fig, {1, 3, 2}).num_edges() == 5);
  CHECK_THROWS_AS(delete_edge(tri, {1, 2, 5}), Error);
}

TEST_CASE("contract_edge on a path") {
  // Identifying 1 with 2 moves [1,2,1]'s partner onto vertex 2.
  const GainGraph path = zgraph(3, {{1, 2, 1}, {2, 3, 1}});
  const GainGraph c = contract_edge(path, {1, 2, 1});
  CHECK(c.vertices() == std::vector<Vertex>{2, 3});
  CHECK(c.num_edges() == 1);
  // The class is [2,3,1]; the alternative reading [3,2,1] = [2,3,-1] differs
  // only by the affine change x_3 -> x_3 - 2, so chi is the same.
  CHECK(c.edges()[0] == EdgeClass{2, 3, 1});
  CHECK(chi_gaingraph_recursive(c, ArrangementKind::Affinographic) ==
        chi_gaingraph_recursive(GainGraph(GainGroup::integers(), {2, 3}).add_edge(2, 3, -1), ArrangementKind::Affinographic));
}

TEST_CASE("contract_edge on the unbalanced triangle") {
  const GainGraph tri = zgraph(3, {{1, 2, 0}, {2, 3, 0}, {1, 3, 1}});
  const GainGraph c = contract_edge(tri, {1, 3, 1});
  CHECK(c.vertices() == std::vector<Vertex>{2, 3});
  CHECK(c.num_edges() == 2);
  // Same chi as restricting A to x_1 - x_3 = 1, in either orientation.
  const Arrangement a = build_affinographic(tri);
  const IntPolynomial restricted = chi_poset(restriction(a, a.find(Hyperplane(
      {Scalar::from_int(1, Domain::rational()), Scalar::from_int(0, Domain::rational()),
       Scalar::from_int(-1, Domain::rational())},
      Scalar::from_int(1, Domain::rational())))));
  CHECK(chi_gaingraph_recursive(c, ArrangementKind::Affinographic) == restricted);
  CHECK(chi_gaingraph_recursive(contract_edge(tri, {3, 1, -1}), ArrangementKind::Affinographic) == restricted);
  CHECK(chi_gaingraph_recursive(zgraph(2, {{1, 2, 0}, {1, 2, -1}}), ArrangementKind::Affinographic) == restricted);
}

TEST_CASE("contract_edge drops parallel classes") {
  const GainGraph g = zgraph(2, {{1, 2, 0}, {1, 2, 1}});
  const GainGraph c = contract_edge(g, {1, 2, 0});
  CHECK(c.vertices() == std::vector<Vertex>{2});
  CHECK(c.num_edges() == 0);
  CHECK(restriction(build_affinographic(g), 0).empty());
}

TEST_CASE("switch_vertex") {
  const GainGraph one = GainGraph::with_vertices(GainGroup::mod(2), 2).add_edge(1, 2, 0);
  CHECK(switch_vertex(one, 1).edges()[0] == EdgeClass{1, 2, 1});
  CHECK(switch_vertex(switch_vertex(one, 1), 1) == one);
  GainGraph tri = GainGraph::with_vertices(GainGroup::mod(2), 3);
  tri.add_edge(1, 2, 0).add_edge(2, 3, 0).add_edge(1, 3, 1);
  for (Vertex v : {1, 2, 3}) {
    const auto cycles = enumerate_cycles(switch_vertex(tri, v));
    REQUIRE(cycles.size() == 1);
    CHECK_FALSE(is_balanced(cycles[0]));
  }
  CHECK_THROWS_AS(switch_vertex(zgraph(2, {{1, 2, 0}}), 1), Error);
}

TEST_CASE("induced_subgraph") {
  const GainGraph fig = example_gain_graph();
  CHECK(induced_subgraph(fig, {2, 3}).edges() == std::vector<EdgeClass>{{2, 3, -1}, {2, 3, 1}});
  CHECK(induced_subgraph(fig, {1, 2, 3}) == fig);
  CHECK(induced_subgraph(fig, {2}).num_edges() == 0);
  CHECK_THROWS_AS(induced_subgraph(fig, {4}), Error);
}

TEST_CASE("enumerate_cycles") {
  const GainGraph c4 = zgraph(4, {{1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {1, 4, 0}});
  const auto cycles = enumerate_cycles(c4);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].gain == 0);

  GainGraph k4 = GainGraph::with_vertices(GainGroup::integers(), 4);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) k4.add_edge(i, j, 0);
  }
  const auto all = enumerate_cycles(k4);
  CHECK(all.size() == 7);
  CHECK(std::count_if(all.begin(), all.end(), [](const auto& c) { return c.length() == 3; }) == 4);

  const GainGraph digon = zgraph(2, {{1, 2, 0}, {1, 2, 1}});
  CHECK(enumerate_cycles(digon).empty());
  CycleOptions with;
  with.include_digons = true;
  const auto d = enumerate_cycles(digon, with);
  REQUIRE(d.size() == 1);
  CHECK((d[0].gain == 1 || d[0].gain == -1));
}

TEST_CASE("is_balanced") {
  const auto pos = enumerate_cycles(zgraph(3, {{1, 2, 0}, {2, 3, 0}, {1, 3, 0}}));
  CHECK(is_balanced(pos.at(0)));
  GainGraph s = GainGraph::with_vertices(GainGroup::mod(2), 3);
  s.add_edge(1, 2, 0).add_edge(2, 3, 0).add_edge(1, 3, 1);
  CHECK_FALSE(is_balanced(enumerate_cycles(s).at(0)));
  // Traversal 1 -> 2 -> 3 -> 1 with gains 1, 1, -2.
  const auto z = enumerate_cycles(zgraph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 2}}));
  CHECK(is_balanced(z.at(0)));
}

TEST_CASE("canonical_key") {
  GainGraph a = zgraph(3, {});
  a.add_edge(1, 2, 0).add_edge(2, 3, 1);
  GainGraph b = zgraph(3, {});
  b.add_edge(3, 2, -1).add_edge(1, 2, 0);
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(zgraph(3, {{1, 2, 0}, {2, 3, 2}})));
  CHECK(canonical_key(a) != canonical_key(delete_edge(a, {1, 2, 0})));
  CHECK(canonical_key(a) != canonical_key(GainGraph(GainGroup::integers(), {1, 2, 4}).add_edge(1, 2, 0).add_edge(2, 4, 1)));
  CHECK(shape_key(a) == shape_key(GainGraph(GainGroup::integers(), {1, 2, 4}).add_edge(1, 2, 0).add_edge(2, 4, 1)));
}
