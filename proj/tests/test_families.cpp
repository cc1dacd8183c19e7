#include "doctest.h"
#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/freeness.hpp"

using namespace gainarr;

namespace {

std::int64_t factorial(int l) { return l <= 1 ? 1 : l * factorial(l - 1); }

}  // namespace

TEST_CASE("make_family") {
  CHECK(make_family(FamilyKind::Catalan, 2, 1).num_edges() == 3);
  CHECK(make_family(FamilyKind::Catalan, 4, 2).num_edges() == 5 * 6);
  CHECK(make_family(FamilyKind::Shi, 3, 1).num_edges() == 6);
  CHECK(make_family(FamilyKind::Coxeter, 4).num_edges() == 6);
  CHECK(make_family(FamilyKind::Boolean, 4).num_edges() == 0);
  CHECK(build_bias(make_family(FamilyKind::Dms, 2, 1)).size() == 5);
  CHECK(family_arrangement(FamilyKind::Dms) == ArrangementKind::Bias);
  CHECK(parse_family_kind("shi") == FamilyKind::Shi);
  CHECK_THROWS_AS(parse_family_kind("braid"), Error);
  CHECK_THROWS_AS(make_family(FamilyKind::Shi, 3, 0), Error);
  CHECK_THROWS_AS(make_family(FamilyKind::Catalan, 1, 1), Error);
}

TEST_CASE("digraph_to_gaingraph") {
  CHECK(digraph_to_gaingraph({3, {}}) == make_family(FamilyKind::Coxeter, 3));
  CHECK(digraph_to_gaingraph({3, {{1, 2}, {1, 3}, {2, 3}}}) == make_family(FamilyKind::Shi, 3, 1));
  CHECK(digraph_to_gaingraph({3, {{1, 2}}}).num_edges() == 4);
  CHECK_THROWS_AS(digraph_to_gaingraph({3, {{2, 1}}}), Error);
}

TEST_CASE("digraph criteria") {
  CHECK_FALSE(ab_free_criterion({3, {{1, 2}, {2, 3}}}));
  CHECK_FALSE(ab_free_criterion({4, {{1, 2}, {3, 4}}}));
  CHECK(ab_free_criterion({4, {{1, 2}, {1, 3}, {1, 4}}}));
  CHECK(ab_free_criterion({3, {{1, 2}, {2, 3}, {1, 3}}}));
  CHECK(ab_supersolvable_criterion({3, {{1, 3}, {2, 3}}}));
  CHECK(ab_supersolvable_criterion({3, {{1, 2}, {1, 3}}}));
  CHECK_FALSE(ab_supersolvable_criterion({4, {{1, 2}, {3, 4}}}));
}

TEST_CASE("raney") {
  CHECK(raney(3, 2, 1) == 5);
  CHECK(raney(2, 2, 2) == 5);
  CHECK(raney(3, 2, 2) == 14);
  CHECK(raney(4, 2, 1) == 14);
  CHECK_THROWS_AS(raney(0, 1, 0), Error);
}

TEST_CASE("family chamber counts") {
  for (int l = 2; l <= 4; ++l) {
    for (int m = 0; m <= 2; ++m) {
      const IntPolynomial chi = chi_gaingraph_recursive(make_family(FamilyKind::Catalan, l, m), ArrangementKind::Affinographic);
      CHECK(region_count(chi, static_cast<std::size_t>(l)) == factorial(l) * raney(l, m + 1, 1));
    }
    for (int m = 1; m <= 2; ++m) {
      const IntPolynomial chi = chi_gaingraph_recursive(make_family(FamilyKind::Dms, l, m), ArrangementKind::Bias);
      CHECK(region_count(chi, static_cast<std::size_t>(l)) == factorial(l) * raney(l, m + 1, 2));
    }
  }
  const IntPolynomial dms31 = chi_gaingraph_recursive(make_family(FamilyKind::Dms, 3, 1), ArrangementKind::Bias);
  CHECK(dms31 == IntPolynomial::from_roots({1, 5, 6}));
  CHECK(region_count(dms31, 3) == 84);
}

TEST_CASE("fixtures") {
  CHECK(example_gain_graph().num_edges() == 6);
  const auto c = if_along_edges(free_not_kpi1_graph(), ArrangementKind::Bias);
  CHECK(c.verdict);
  CHECK(unbalanced_triangle().num_edges() == 3);
}
