#include "doctest.h"
#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"
#include "gainarr/freeness.hpp"
#include "gainarr/signed.hpp"

using namespace gainarr;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Pairs complete(int n) {
  Pairs out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

SimpleGraph simple(int n, const Pairs& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// All induced subgraphs on four vertices checked against the three forbidden
// shapes by brute force over vertex orders.
bool threshold_brute(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> idx(4);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          const bool ab = g.adjacent(a, b), bc = g.adjacent(b, c), cd = g.adjacent(c, d), da = g.adjacent(d, a),
                     ac = g.adjacent(a, c), bd = g.adjacent(b, d);
          if (ab && cd && !bc && !da && !ac && !bd) return false;  // 2K2
          if (ab && bc && cd && da && !ac && !bd) return false;   // C4
          if (ab && bc && cd && !da && !ac && !bd) return false;  // P4
        }
  return true;
}

}  // namespace

TEST_CASE("is_balanced_chordal") {
  CHECK_FALSE(is_balanced_chordal(SignedGraphView(signed_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {}))));
  CHECK(is_balanced_chordal(SignedGraphView(signed_graph(4, complete(4), {}))));
  CHECK(is_balanced_chordal(SignedGraphView(signed_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 3}}))));
}

TEST_CASE("has_induced_unbalanced_cycle") {
  CHECK(has_induced_unbalanced_cycle(SignedGraphView(signed_graph(3, {{0, 1}, {1, 2}}, {{0, 2}}))));
  CHECK_FALSE(has_induced_unbalanced_cycle(SignedGraphView(signed_graph(3, complete(3), {}))));
  // Unbalanced 4-cycle with a positive chord: both triangles are unbalanced
  // only if the chord splits the odd sign badly; here one triangle is.
  const GainGraph chorded = signed_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}, {{0, 3}});
  CHECK(has_induced_unbalanced_cycle(SignedGraphView(chorded)));
  // Unbalanced 4-cycle with a doubled chord: every induced cycle on three
  // vertices has two classes on one pair, so none is an induced cycle.
  const GainGraph doubled = signed_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}, {{0, 3}, {0, 2}});
  CHECK_FALSE(has_induced_unbalanced_cycle(SignedGraphView(doubled)));
}

TEST_CASE("has_switching_obstruction") {
  const GainGraph fig = switching_obstruction_graph();
  CHECK(has_switching_obstruction(SignedGraphView(fig)));
  for (Vertex v : fig.vertices()) CHECK(has_switching_obstruction(SignedGraphView(switch_vertex(fig, v))));
  CHECK_FALSE(has_switching_obstruction(SignedGraphView(signed_graph(4, complete(4), {}))));
}

TEST_CASE("signed_freeness_criterion") {
  CHECK(signed_freeness_criterion(SignedGraphView(signed_graph(3, complete(3), {}))));
  CHECK_FALSE(signed_freeness_criterion(SignedGraphView(signed_graph(3, {{0, 1}, {1, 2}}, {{0, 2}}))));
  CHECK_FALSE(signed_freeness_criterion(SignedGraphView(switching_obstruction_graph())));
  const GainGraph fig = switching_obstruction_graph();
  CHECK_FALSE(free_along_edges(fig, ArrangementKind::Bias, FreenessMode::DivisionalAlongEdges));
  CHECK_THROWS_AS(SignedGraphView(GainGraph::with_vertices(GainGroup::integers(), 2)), Error);
}

TEST_CASE("is_threshold") {
  CHECK(is_threshold(simple(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK_FALSE(is_threshold(simple(4, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK_FALSE(is_threshold(simple(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_threshold(simple(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  CHECK(is_threshold(SimpleGraph(5)));
}

TEST_CASE("threshold tests agree with brute force on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    const Pairs all = complete(n);
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      Pairs e;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (mask >> k & 1u) e.push_back(all[k]);
      }
      const SimpleGraph g = simple(n, e);
      const bool expected = threshold_brute(g);
      REQUIRE(is_threshold(g) == expected);
      REQUIRE(is_threshold_by_elimination(g) == expected);
    }
  }
}

TEST_CASE("edelman_reiner_freeness") {
  CHECK(edelman_reiner_freeness(SignedGraphView(signed_graph(4, complete(4), {{0, 1}}))));
  CHECK_FALSE(edelman_reiner_freeness(SignedGraphView(signed_graph(4, complete(4), {{0, 1}, {2, 3}}))));
  CHECK(edelman_reiner_freeness(SignedGraphView(signed_graph(3, complete(3), {}))));
  try {
    edelman_reiner_freeness(SignedGraphView(signed_graph(3, {{0, 1}}, {})));
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}

TEST_CASE("Shi-type signed graphs over F2") {
  // Every pair positive plus a negative arc set: free iff the criterion holds.
  for (const Pairs& neg : {Pairs{{0, 1}, {0, 2}}, Pairs{{0, 1}, {1, 2}}, Pairs{{0, 1}, {2, 3}}}) {
    const GainGraph g = signed_graph(4, complete(4), neg);
    CHECK(signed_freeness_criterion(SignedGraphView(g)) ==
          free_along_edges(g, ArrangementKind::Bias, FreenessMode::DivisionalAlongEdges));
  }
}
