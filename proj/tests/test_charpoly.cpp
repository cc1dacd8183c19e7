#include <random>

#include "doctest.h"
#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/signed.hpp"
#include "gainarr/verify.hpp"

using namespace gainarr;

namespace {

const IntPolynomial t{0, 1};

GainGraph one_edge() { return GainGraph::with_vertices(GainGroup::integers(), 2).add_edge(1, 2, 0); }

// Brute-force poset: closures of every subset of hyperplanes, counted by
// inclusion-exclusion over subsets with nonempty intersection.
IntPolynomial chi_by_subsets(const Arrangement& a) {
  IntPolynomial out;
  const std::size_t n = a.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1u) idx.push_back(k);
    }
    // The intersection is nonempty iff the linear part and the homogenized
    // rows have the same rank.
    Arrangement sub(a.dim(), a.domain());
    for (auto k : idx) sub.add(a.hyperplanes()[k]);
    const auto rows = sub.homogeneous_rows();
    Matrix lin(sub.size(), a.dim(), a.domain()), hom(sub.size(), a.dim() + 1, a.domain());
    for (std::size_t r = 0; r < sub.size(); ++r) {
      for (std::size_t c = 0; c <= a.dim(); ++c) {
        hom.set(r, c, rows[r][c]);
        if (c < a.dim()) lin.set(r, c, rows[r][c]);
      }
    }
    const std::size_t rk = matrix_rank_field(lin);
    if (rk != matrix_rank_field(hom)) continue;
    const std::int64_t sign = idx.size() % 2 ? -1 : 1;
    out = out + IntPolynomial::monomial(sign, static_cast<int>(a.dim() - rk));
  }
  return out;
}

}  // namespace

TEST_CASE("intersection_poset") {
  const IntersectionPoset empty = intersection_poset(Arrangement(3, Domain::rational()));
  CHECK(empty.flats.size() == 1);
  CHECK(empty.flats[0].mu == 1);
  const IntersectionPoset boolean = intersection_poset(build_bias(GainGraph::with_vertices(GainGroup::integers(), 4)));
  CHECK(boolean.flats.size() == 16);
  const IntersectionPoset cox = intersection_poset(build_affinographic(make_family(FamilyKind::Coxeter, 3)));
  REQUIRE(cox.flats.size() == 5);
  std::vector<std::int64_t> mu;
  for (const auto& f : cox.flats) mu.push_back(f.mu);
  CHECK(mu == std::vector<std::int64_t>{1, -1, -1, -1, 2});
}

TEST_CASE("chi_poset on known examples") {
  for (int l = 1; l <= 4; ++l) {
    const GainGraph g = GainGraph::with_vertices(GainGroup::integers(), l);
    CHECK(chi_poset(build_affinographic(g)) == IntPolynomial::monomial(1, l));
    CHECK(chi_poset(build_bias(g)) == IntPolynomial::power_of_linear(1, l));
  }
  const GainGraph tri = signed_graph(3, {{0, 1}, {1, 2}}, {{0, 2}});
  CHECK(chi_poset(build_affinographic(tri)) == t * IntPolynomial{3, -3, 1});
  CHECK(chi_poset(build_affinographic(switching_obstruction_graph())) ==
        t * IntPolynomial{-2, 1} * IntPolynomial{10, -6, 1});
}

TEST_CASE("chi_gaingraph_recursive") {
  CHECK(chi_gaingraph_recursive(one_edge(), ArrangementKind::Affinographic) == IntPolynomial{0, -1, 1});
  CHECK(chi_gaingraph_recursive(one_edge(), ArrangementKind::Bias) == IntPolynomial::from_roots({1, 2}));
  CHECK(chi_poset(build_bias(one_edge())) == IntPolynomial::from_roots({1, 2}));
  const GainGraph tri = unbalanced_triangle();
  CHECK(chi_gaingraph_recursive(tri, ArrangementKind::Affinographic) == t * IntPolynomial{3, -3, 1});
  CHECK(chi_poset(build_affinographic(tri)) == t * IntPolynomial{3, -3, 1});
  CHECK(chi_gaingraph_recursive(tri, ArrangementKind::Bias) == IntPolynomial{-1, 1} * IntPolynomial{7, -5, 1});
  // Coning multiplies by (t - 1).
  CHECK(chi_gaingraph_recursive(tri, ArrangementKind::ConeAffinographic) ==
        IntPolynomial{-1, 1} * chi_gaingraph_recursive(tri, ArrangementKind::Affinographic));
}

TEST_CASE("poset agrees with brute-force subset sums") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 60; ++k) {
    const GainGroup group = k % 3 == 0 ? GainGroup::mod(3) : GainGroup::integers();
    const GainGraph g = random_gain_graph(rng, group, 3 + k % 2, 1 + k % 6);
    for (auto kind : {ArrangementKind::Affinographic, ArrangementKind::Bias}) {
      const Arrangement a = build_arrangement(g, kind);
      if (a.size() > 12) continue;
      CHECK(chi_poset(a) == chi_by_subsets(a));
    }
  }
}

TEST_CASE("chi_finite_field_oracle") {
  CHECK(chi_finite_field_oracle(GainGraph::with_vertices(GainGroup::integers(), 2)) == IntPolynomial{0, 0, 1});
  CHECK(chi_finite_field_oracle(make_family(FamilyKind::Shi, 2, 1)) == IntPolynomial{0, -2, 1});
  CHECK(chi_finite_field_oracle(make_family(FamilyKind::Catalan, 2, 1)) == IntPolynomial{0, -3, 1});
  CHECK(count_points_mod_p(make_family(FamilyKind::Catalan, 2, 1), 7) == 7 * 4);
  CHECK_THROWS_AS(chi_finite_field_oracle(GainGraph::with_vertices(GainGroup::mod(2), 2)), Error);
}

TEST_CASE("region_count") {
  for (int l = 1; l <= 4; ++l) {
    CHECK(region_count(IntPolynomial::power_of_linear(1, l), static_cast<std::size_t>(l)) == (1 << l));
  }
  const IntPolynomial cox = chi_poset(build_affinographic(make_family(FamilyKind::Coxeter, 3)));
  CHECK(region_count(cox, 3) == 6);
  const IntPolynomial dms = chi_gaingraph_recursive(make_family(FamilyKind::Dms, 2, 1), ArrangementKind::Bias);
  CHECK(dms == IntPolynomial::from_roots({1, 4}));
  CHECK(region_count(dms, 2) == 10);
}

TEST_CASE("poset bounds") {
  PosetOptions tight;
  tight.max_hyperplanes = 3;
  try {
    chi_poset(build_affinographic(make_family(FamilyKind::Coxeter, 4)), tight);
    FAIL("expected a bound error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}
