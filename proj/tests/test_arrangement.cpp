#include "doctest.h"
#include "gainarr/arrangement.hpp"
#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"
#include "gainarr/families.hpp"
#include "gainarr/signed.hpp"

using namespace gainarr;

namespace {

Hyperplane hp(Domain d, std::vector<std::int64_t> a, std::int64_t c = 0) {
  std::vector<Scalar> coeffs;
  for (auto v : a) coeffs.push_back(Scalar::from_int(v, d));
  return Hyperplane(coeffs, Scalar::from_int(c, d));
}

bool contains(const Arrangement& a, const Hyperplane& h) { return a.find(h) < a.size(); }

GainGraph braid(int l) { return make_family(FamilyKind::Coxeter, l); }

}  // namespace

TEST_CASE("build_affinographic") {
  const Arrangement a = build_affinographic(example_gain_graph());
  const Domain q = Domain::rational();
  CHECK(a.size() == 6);
  CHECK(a.dim() == 3);
  // (x1 - x2)(x1 - x3)(x1 - x2 - 1)(x2 - x3 - 1)(x2 - x3 + 1)(x1 - x3 - 2)
  for (const auto& h : {hp(q, {1, -1, 0}), hp(q, {1, 0, -1}), hp(q, {1, -1, 0}, 1), hp(q, {0, 1, -1}, 1),
                        hp(q, {0, 1, -1}, -1), hp(q, {1, 0, -1}, 2)}) {
    CHECK(contains(a, h));
  }
  CHECK(build_affinographic(GainGraph::with_vertices(GainGroup::integers(), 3)).empty());
  CHECK(build_affinographic(braid(5)).size() == 10);
  CHECK(build_affinographic(GainGraph::with_vertices(GainGroup::mod(3), 2).add_edge(1, 2, 2)).domain() ==
        Domain::prime_field(3));
}

TEST_CASE("build_cone") {
  const Arrangement empty(3, Domain::rational());
  const Arrangement c = build_cone(empty);
  CHECK(c.size() == 1);
  CHECK(c.hyperplanes()[0] == hp(Domain::rational(), {0, 0, 0, 1}));
  Arrangement one(2, Domain::rational());
  one.add(hp(Domain::rational(), {1, -1}, 1));
  const Arrangement c1 = build_cone(one);
  CHECK(c1.size() == 2);
  CHECK(contains(c1, hp(Domain::rational(), {1, -1, -1})));
  CHECK(contains(c1, hp(Domain::rational(), {0, 0, 1})));
  CHECK(c1.is_central());
}

TEST_CASE("build_bias") {
  const Arrangement b = build_bias(example_gain_graph());
  CHECK(b.size() == 9);
  CHECK(b.domain() == Domain::rational_function());
  const Domain d = Domain::rational_function();
  const auto lin = [&](int i, int j, Gain g) {
    std::vector<Scalar> a(3, Scalar::zero(d));
    a[static_cast<std::size_t>(i - 1)] = Scalar::one(d);
    a[static_cast<std::size_t>(j - 1)] = -Scalar::q_power(g);
    return Hyperplane(a, Scalar::zero(d));
  };
  CHECK(contains(b, hp(d, {1, 0, 0})));
  CHECK(contains(b, lin(1, 2, 1)));
  CHECK(contains(b, lin(2, 3, -1)));
  CHECK(contains(b, lin(1, 3, 2)));
  CHECK(build_bias(GainGraph::with_vertices(GainGroup::integers(), 4)).size() == 4);
  // Complete signed graph: type B, l^2 hyperplanes, exponents 1, 3, 5.
  GainGraph s = GainGraph::with_vertices(GainGroup::mod(2), 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) s.add_edge(i, j, 0).add_edge(i, j, 1);
  }
  const Arrangement bs = build_bias(s);
  CHECK(bs.size() == 9);
  CHECK(bs.domain() == Domain::cyclotomic(2));
  CHECK(chi_poset(bs) == IntPolynomial::from_roots({1, 3, 5}));
}

TEST_CASE("localization") {
  const Arrangement a = build_affinographic(braid(4));
  const Arrangement one = localization(a, {0});
  CHECK(one.size() == 1);
  CHECK(localization(a, {}).empty());
  const Domain q = Domain::rational();
  const std::size_t h12 = a.find(hp(q, {1, -1, 0, 0}));
  const std::size_t h23 = a.find(hp(q, {0, 1, -1, 0}));
  const Arrangement x123 = localization(a, {h12, h23});
  CHECK(x123.size() == 3);
  CHECK(contains(x123, hp(q, {1, 0, -1, 0})));
}

TEST_CASE("restriction") {
  const Domain q = Domain::rational();
  Arrangement a(3, q);
  a.add(hp(q, {1, -1, 0}));
  a.add(hp(q, {1, -1, 0}, 1));
  a.add(hp(q, {0, 1, -1}));
  const Arrangement r = restriction(a, 0);
  CHECK(r.size() == 1);
  CHECK(r.dim() == 2);
  CHECK_THROWS_AS(restriction(a, 5), Error);
}

TEST_CASE("ziegler_restriction") {
  // Cone over a 3-vertex graph, restricted to z = 0.
  GainGraph g = GainGraph::with_vertices(GainGroup::integers(), 3);
  g.add_edge(1, 2, 0).add_edge(1, 2, 1).add_edge(2, 3, 0).add_edge(1, 3, -1).add_edge(1, 3, 0).add_edge(1, 3, 2);
  const Arrangement c = build_cone(build_affinographic(g));
  const Multiarrangement z = ziegler_restriction(c, c.size() - 1);
  CHECK(z.arrangement.size() == 3);
  auto m = z.multiplicity;
  std::sort(m.begin(), m.end());
  CHECK(m == std::vector<int>{1, 2, 3});
  CHECK(z.total() == 6);

  // Bias restricted to x3 = 0: x1^{m3+1} x2^{m2+1} and the 1-2 lines.
  const Arrangement b = build_bias(g);
  const Multiarrangement zb = ziegler_restriction(b, 2);
  CHECK(zb.total() == static_cast<int>(b.size()) - 1);
  CHECK(zb.arrangement.size() == 4);
  auto mb = zb.multiplicity;
  std::sort(mb.begin(), mb.end());
  CHECK(mb == std::vector<int>{1, 1, 2, 4});

  const Arrangement boolean = build_bias(GainGraph::with_vertices(GainGroup::integers(), 3));
  const Multiarrangement zbool = ziegler_restriction(boolean, 0);
  CHECK(zbool.multiplicity == std::vector<int>{1, 1});
}

TEST_CASE("essentialize") {
  const Arrangement cox = build_affinographic(braid(3));
  CHECK(arrangement_rank(cox) == 2);
  const Arrangement e = essentialize(cox);
  CHECK(e.dim() == 2);
  CHECK(e.size() == 3);
  const Arrangement boolean = build_bias(GainGraph::with_vertices(GainGroup::integers(), 3));
  CHECK(essentialize(boolean).dim() == 3);
  CHECK(essentialize(boolean).size() == 3);
  // Dropping the lineality space divides chi by t^(dim - rank).
  const Arrangement cone = build_cone(build_affinographic(example_gain_graph()));
  const Arrangement ess = essentialize(cone);
  const auto k = static_cast<int>(cone.dim() - ess.dim());
  CHECK(chi_poset(cone) == chi_poset(ess) * IntPolynomial::monomial(1, k));
}
