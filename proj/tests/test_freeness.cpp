#include <random>

#include "doctest.h"
#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/freeness.hpp"
#include "gainarr/verify.hpp"

using namespace gainarr;

namespace {

constexpr ArrangementKind cone = ArrangementKind::ConeAffinographic;
constexpr ArrangementKind bias = ArrangementKind::Bias;

GainGraph digraph_graph(int l, std::vector<std::pair<int, int>> arcs) { return digraph_to_gaingraph({l, std::move(arcs)}); }

// Direct transcription of the recursive definitions, no memo and no pruning.
bool naive(const GainGraph& g, ArrangementKind kind, FreenessMode mode) {
  if (g.num_edges() == 0) return true;
  const std::size_t ambient = g.num_vertices() + (kind == cone ? 1 : 0);
  const IntPolynomial chi = chi_gaingraph_recursive(g, kind);
  for (const auto& e : g.edges()) {
    const GainGraph c = contract_edge(g, orient(e));
    const IntPolynomial chi_c = chi_gaingraph_recursive(c, kind);
    if (mode == FreenessMode::DivisionalAlongEdges) {
      if (chi.divisible_by(chi_c) && naive(c, kind, mode)) return true;
      continue;
    }
    const GainGraph d = delete_edge(g, e);
    const auto ed = exponents_from_chi(chi_gaingraph_recursive(d, kind), ambient);
    const auto ec = exponents_from_chi(chi_c, ambient - 1);
    if (!ed || !ec || !multiset_includes(*ed, *ec)) continue;
    if (naive(d, kind, mode) && naive(c, kind, mode)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("exponents_from_chi") {
  CHECK(exponents_from_chi(IntPolynomial::from_roots({1, 4}), 2) == ExponentMultiset{1, 4});
  CHECK_FALSE(exponents_from_chi(IntPolynomial{0, 3, -3, 1}, 3).has_value());
  CHECK(exponents_from_chi(IntPolynomial::from_roots({1, 5, 6}), 3) == ExponentMultiset{1, 5, 6});
  CHECK(exponents_from_chi(IntPolynomial{0, 0, 1}, 2) == ExponentMultiset{0, 0});
  CHECK_FALSE(exponents_from_chi(IntPolynomial::from_roots({1, -2}), 2).has_value());
  CHECK_THROWS_AS(exponents_from_chi(IntPolynomial::from_roots({1, 2}), 3), Error);
  CHECK(multiset_includes({1, 2, 2, 5}, {2, 2, 5}));
  CHECK_FALSE(multiset_includes({1, 2, 5}, {2, 2}));
}

TEST_CASE("if_along_edges") {
  for (auto kind : {cone, bias}) {
    const auto edgeless = if_along_edges(GainGraph::with_vertices(GainGroup::integers(), 3), kind);
    CHECK(edgeless.verdict);
    CHECK(edgeless.witness.size() == 1);
    const auto star = if_along_edges(digraph_graph(3, {{1, 2}, {1, 3}}), kind);
    CHECK(star.verdict);
    CHECK(replay_witness(star));
    const auto path = if_along_edges(digraph_graph(3, {{1, 2}, {2, 3}}), kind);
    CHECK_FALSE(path.verdict);
    CHECK(path.reason != Refutation::None);
    // chi of the path does not split, so no edge is tried.
    CHECK(path.reason == Refutation::NonIntegerRoots);
    CHECK(path.rejections.empty());
  }
  CHECK_THROWS_AS(if_along_edges(unbalanced_triangle(), ArrangementKind::Affinographic), Error);
}

TEST_CASE("if_along_edges rejects every edge when chi splits") {
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), 4);
  g.add_edge(1, 2, -1).add_edge(1, 3, 1).add_edge(2, 4, -1).add_edge(3, 4, 1);
  for (Gain x : {-1, 0, 1, 2}) g.add_edge(2, 3, x);
  const auto c = if_along_edges(g, bias);
  CHECK_FALSE(c.verdict);
  CHECK(c.reason == Refutation::NoAdmissibleEdge);
  REQUIRE(c.rejections.size() == g.num_edges());
  for (const auto& r : c.rejections) CHECK(r.reason != Refutation::None);
}

TEST_CASE("df_along_edges") {
  for (auto kind : {cone, bias}) {
    CHECK(df_along_edges(GainGraph::with_vertices(GainGroup::integers(), 2), kind).verdict);
    const auto tri = df_along_edges(unbalanced_triangle(), kind);
    CHECK_FALSE(tri.verdict);
    CHECK(tri.reason == Refutation::NonIntegerRoots);
  }
  const auto cat = df_along_edges(make_family(FamilyKind::Catalan, 3, 1), cone);
  REQUIRE(cat.verdict);
  CHECK(cat.exponents == ExponentMultiset{0, 1, 4, 5});
  CHECK(replay_witness(cat));
}

TEST_CASE("witness replay rejects tampering") {
  auto cert = if_along_edges(make_family(FamilyKind::Shi, 3, 1), bias);
  REQUIRE(cert.verdict);
  REQUIRE(cert.witness.size() > 1);
  CHECK(replay_witness(cert));
  auto broken = cert;
  broken.witness[0].chi = "t^3";
  CHECK_FALSE(replay_witness(broken));
  auto wrong_edge = cert;
  wrong_edge.witness[0].edge = EdgeClass{1, 2, 7};
  CHECK_FALSE(replay_witness(wrong_edge));
}

TEST_CASE("search agrees with the naive recursion") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 150; ++k) {
    const GainGroup group = k % 4 == 0 ? GainGroup::mod(2) : GainGroup::integers();
    const GainGraph g = random_gain_graph(rng, group, 3 + k % 2, 2 + k % 5, -1, 1);
    for (auto kind : {cone, bias}) {
      for (auto mode : {FreenessMode::InductiveAlongEdges, FreenessMode::DivisionalAlongEdges}) {
        CHECK(decide_along_edges(g, kind, mode).verdict == naive(g, kind, mode));
      }
    }
  }
}

TEST_CASE("verdict-only path matches certificates") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const GainGraph g = random_gain_graph(rng, GainGroup::integers(), 4, 1 + k % 7, -2, 2);
    for (auto mode : {FreenessMode::InductiveAlongEdges, FreenessMode::DivisionalAlongEdges}) {
      clear_freeness_cache();
      const bool fast = free_along_edges(g, bias, mode);
      clear_freeness_cache();
      CHECK(decide_along_edges(g, bias, mode).verdict == fast);
    }
  }
}

TEST_CASE("exponent shift between cone and bias") {
  // exp(cA) = {0, 1, d2, ..., dl} and exp(B) = {1, d2 + 1, ..., dl + 1}.
  for (auto g : {make_family(FamilyKind::Catalan, 3, 1), make_family(FamilyKind::Shi, 4, 1),
                 digraph_graph(4, {{1, 2}, {1, 3}})}) {
    const auto c = if_along_edges(g, cone);
    const auto b = if_along_edges(g, bias);
    REQUIRE(c.verdict);
    REQUIRE(b.verdict);
    auto e = *c.exponents;
    std::sort(e.begin(), e.end());
    REQUIRE(e[0] == 0);
    REQUIRE(e[1] == 1);
    ExponentMultiset shifted{1};
    for (std::size_t k = 2; k < e.size(); ++k) shifted.push_back(e[k] + 1);
    auto got = *b.exponents;
    std::sort(got.begin(), got.end());
    CHECK(got == shifted);
  }
}

TEST_CASE("node cap") {
  try {
    clear_freeness_cache();
    decide_along_edges(make_family(FamilyKind::Catalan, 4, 1), bias, FreenessMode::InductiveAlongEdges, {2, true});
    FAIL("expected a bound error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}
