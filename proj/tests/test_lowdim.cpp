#include "doctest.h"
#include "gainarr/arrangement.hpp"
#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/lowdim.hpp"
#include "gainarr/signed.hpp"

using namespace gainarr;

namespace {

Exp2 e2(int a, int b) { return {a, b}; }

GainGraph three(std::vector<Gain> a, std::vector<Gain> b, std::vector<Gain> c) {
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), 3);
  for (auto x : a) g.add_edge(1, 2, x);
  for (auto x : b) g.add_edge(2, 3, x);
  for (auto x : c) g.add_edge(1, 3, x);
  return g;
}

}  // namespace

TEST_CASE("exp2_solver") {
  CHECK(exp2_solver(lines_multiarrangement({1, 1, 1})) == e2(1, 2));
  CHECK(exp2_solver(lines_multiarrangement({2, 2})) == e2(2, 2));
  CHECK(exp2_solver(q_power_multiarrangement(0, 0, {0, 1})) == e2(1, 3));
  CHECK(exp2_solver(lines_multiarrangement({5})) == e2(0, 5));
  // Over F_p the lines are the same forms reduced mod p.
  CHECK(exp2_solver(lines_multiarrangement({1, 1, 1}, Domain::prime_field(5))) == e2(1, 2));
}

TEST_CASE("exp2_closed_form") {
  CHECK(exp2_closed_form(lines_multiarrangement({3, 1, 1}), Exp2Formula::ThreeLines) == e2(2, 3));
  CHECK(exp2_closed_form(q_power_multiarrangement(1, 1, {0}), Exp2Formula::QPowers) == e2(2, 3));
  CHECK(exp2_closed_form(lines_multiarrangement({1, 1, 1, 1}), Exp2Formula::ManyLines) == e2(1, 3));
  CHECK(exp2_three_lines(2, 2, 2) == e2(3, 3));
  CHECK(exp2_three_lines(3, 2, 2) == e2(3, 4));
  CHECK(exp2_q_powers(0, 0, 2) == e2(1, 3));
  CHECK_THROWS_AS(exp2_many_lines(3, 6), Error);
  CHECK_THROWS_AS(exp2_closed_form(lines_multiarrangement({1, 1}), Exp2Formula::ThreeLines), Error);
  CHECK_THROWS_AS(exp2_closed_form(lines_multiarrangement({1, 1, 1}), Exp2Formula::QPowers), Error);
  CHECK_THROWS_AS(exp2_q_powers(2, 1, 3), Error);
}

TEST_CASE("solver matches closed forms on a small grid") {
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      for (int c = 1; c <= 5; ++c) {
        const auto m = lines_multiarrangement({a, b, c});
        CHECK(exp2_solver(m) == exp2_closed_form(m, Exp2Formula::ThreeLines));
      }
    }
  }
  for (int s = 0; s <= 2; ++s) {
    for (int t = s; t <= 3; ++t) {
      for (int u = t; u <= 4; ++u) {
        std::vector<Gain> gains;
        for (int g = 0; g < u; ++g) gains.push_back(2 * g - 3);
        const auto m = q_power_multiarrangement(s, t, gains);
        CHECK(exp2_solver(m) == exp2_closed_form(m, Exp2Formula::QPowers));
        CHECK(exp2_solver(q_power_multiarrangement(t, s, gains)) == exp2_q_powers(s, t, u));
      }
    }
  }
}

TEST_CASE("multiarrangement validation") {
  Multiarrangement2D m = lines_multiarrangement({1, 1});
  m.multiplicity[0] = 0;
  CHECK_THROWS_AS(m.validate(), Error);
  Multiarrangement2D dup = lines_multiarrangement({1, 1});
  dup.forms[1] = dup.forms[0];
  CHECK_THROWS_AS(dup.validate(), Error);
}

TEST_CASE("schur_bialternant_check") {
  CHECK(schur_bialternant_check(Partition({1}), {0, 1}));
  CHECK(schur_bialternant_check(Partition({2, 1}), {0, 1}));
  CHECK(schur_bialternant_check(Partition({1, 1}), {1, 2}));
  CHECK(schur_bialternant_check(Partition({3, 1, 1}), {-2, 0, 1, 3}));
  CHECK_THROWS_AS(schur_bialternant_check(Partition({1}), {1, 1}), Error);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("yoshinaga_free3") {
  const Free3Result boolean = yoshinaga_free3(build_bias(three({}, {}, {})), 0);
  CHECK(boolean.free);
  CHECK(boolean.exponents == ExponentMultiset{1, 1, 1});
  CHECK(boolean.ziegler == Exp2{1, 1});

  const Free3Result tri = yoshinaga_free3(build_bias(unbalanced_triangle()), 2);
  CHECK_FALSE(tri.free);
  CHECK_FALSE(tri.exponents.has_value());

  GainGraph b3 = GainGraph::with_vertices(GainGroup::mod(2), 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) b3.add_edge(i, j, 0).add_edge(i, j, 1);
  }
  const Arrangement b = build_bias(b3);
  for (std::size_t h = 0; h < b.size(); ++h) {
    const Free3Result r = yoshinaga_free3(b, h);
    CHECK(r.free);
    CHECK(r.exponents == ExponentMultiset{1, 3, 5});
  }
  CHECK_THROWS_AS(yoshinaga_free3(build_affinographic(unbalanced_triangle()), 0), Error);
}

TEST_CASE("coincidence_3dim") {
  const Coincidence3 edgeless = coincidence_3dim(three({}, {}, {}));
  CHECK(edgeless.cone.free);
  CHECK(edgeless.bias.free);
  const Coincidence3 tri = coincidence_3dim(three({0}, {0}, {1}));
  CHECK_FALSE(tri.cone.free);
  CHECK_FALSE(tri.bias.free);
  const Coincidence3 cat = coincidence_3dim(make_family(FamilyKind::Catalan, 3, 1));
  CHECK(cat.cone.free);
  REQUIRE(cat.bias.free);
  CHECK(cat.bias.exponents == ExponentMultiset{1, 5, 6});
  CHECK_THROWS_AS(coincidence_3dim(GainGraph::with_vertices(GainGroup::integers(), 4)), Error);
}
