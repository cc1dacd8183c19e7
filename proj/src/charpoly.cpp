#include "gainarr/charpoly.hpp"

#include <algorithm>
#include <cstdlib>

#include "gainarr/bigint.hpp"
#include "gainarr/detail/flat_engine.hpp"
#include "gainarr/detail/integral_rows.hpp"
#include "gainarr/error.hpp"
#include "gainarr/memo_cache.hpp"

namespace gainarr {

const char* kind_name(ArrangementKind k) {
  switch (k) {
    case ArrangementKind::Affinographic:
      return "affinographic";
    case ArrangementKind::ConeAffinographic:
      return "cone-affinographic";
    case ArrangementKind::Bias:
      return "bias";
  }
  return "?";
}

Arrangement build_arrangement(const GainGraph& g, ArrangementKind kind) {
  switch (kind) {
    case ArrangementKind::Affinographic:
      return build_affinographic(g);
    case ArrangementKind::ConeAffinographic:
      return build_cone(build_affinographic(g));
    case ArrangementKind::Bias:
      return build_bias(g);
  }
  fail(ErrorKind::InvalidArgument, "unknown arrangement kind");
}

std::vector<std::size_t> Flat::hyperplanes() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < 64; ++k) {
    if (mask >> k & 1) out.push_back(k);
  }
  return out;
}

namespace {

detail::FlatList enumerate(const Arrangement& a, std::size_t max_flats) {
  const bool affine = !a.is_central();
  const std::size_t width = affine ? a.dim() + 1 : a.dim();
  auto rows = a.homogeneous_rows();
  if (!affine) {
    for (auto& r : rows) r.pop_back();
  }
  switch (a.domain().kind) {
    case DomainKind::Rational: {
      auto big = detail::integral_rows_rational(rows);
      return detail::with_overflow_fallback([&]<class C>() {
        return detail::FlatEngine(detail::IntRing<C>{}, detail::convert_rows<C>(big), width, affine).run(max_flats);
      });
    }
    case DomainKind::PrimeField:
      return detail::FlatEngine(detail::ModPRing{a.domain().p}, detail::integral_rows_residue(rows), width, affine)
          .run(max_flats);
    case DomainKind::RationalFunction: {
      auto big = detail::integral_rows_laurent(rows);
      try {
        return detail::FlatEngine(detail::SmallLaurentRing{}, detail::small_laurent_rows(big), width, affine)
            .run(max_flats);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Overflow) throw;
      }
      return detail::FlatEngine(detail::LaurentRing<BigInt>{}, big, width, affine).run(max_flats);
    }
    case DomainKind::Cyclotomic: {
      auto big = detail::integral_rows_cyclotomic(rows);
      return detail::with_overflow_fallback([&]<class C>() {
        return detail::FlatEngine(detail::CycloRing<C>{a.domain().p}, detail::convert_rows<C>(big), width, affine)
            .run(max_flats);
      });
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown domain");
}

}  // namespace

IntersectionPoset intersection_poset(const Arrangement& a, const PosetOptions& opts) {
  if (a.size() > opts.max_hyperplanes) {
    fail(ErrorKind::BoundExceeded, "poset limited to " + std::to_string(opts.max_hyperplanes) + " hyperplanes");
  }
  IntersectionPoset out;
  out.ambient_dim = a.dim();
  detail::FlatList list;
  if (a.dim() == 0) {
    list.masks = {0};
    list.ranks = {0};
  } else {
    list = enumerate(a, opts.max_flats);
  }
  out.flats.reserve(list.masks.size());
  for (std::size_t k = 0; k < list.masks.size(); ++k) {
    Flat f;
    f.mask = list.masks[k];
    f.rank = static_cast<std::size_t>(list.ranks[k]);
    f.dim = a.dim() - f.rank;
    std::int64_t s = 0;
    for (std::size_t j = 0; j < k && out.flats[j].rank < f.rank; ++j) {
      if ((out.flats[j].mask & ~f.mask) == 0) s -= out.flats[j].mu;
    }
    f.mu = k == 0 ? 1 : s;
    out.flats.push_back(f);
  }
  return out;
}

IntPolynomial chi_from_poset(const IntersectionPoset& p) {
  std::vector<Checked64> c(p.ambient_dim + 1, Checked64(0));
  for (const auto& f : p.flats) c[f.dim] += Checked64(f.mu);
  return IntPolynomial(std::move(c));
}

IntPolynomial chi_poset(const Arrangement& a, const PosetOptions& opts) {
  return chi_from_poset(intersection_poset(a, opts));
}

namespace {

MemoCache<IntPolynomial>& chi_cache() {
  static MemoCache<IntPolynomial> cache;
  return cache;
}

IntPolynomial chi_rec(const GainGraph& g, bool bias) {
  const int l = static_cast<int>(g.num_vertices());
  if (g.edges().empty()) return bias ? IntPolynomial::power_of_linear(1, l) : IntPolynomial::monomial(1, l);
  std::string key = shape_key(g);
  key.push_back(bias ? 'B' : 'A');
  if (auto hit = chi_cache().find(key)) return *hit;
  const EdgeClass e = g.edges().front();
  IntPolynomial r = chi_rec(delete_edge(g, e), bias) - chi_rec(contract_edge(g, orient(e)), bias);
  chi_cache().insert(std::move(key), r);
  return r;
}

}  // namespace

IntPolynomial chi_gaingraph_recursive(const GainGraph& g, ArrangementKind kind) {
  switch (kind) {
    case ArrangementKind::Affinographic:
      return chi_rec(g, false);
    case ArrangementKind::ConeAffinographic:
      return IntPolynomial({-1, 1}) * chi_rec(g, false);
    case ArrangementKind::Bias:
      return chi_rec(g, true);
  }
  fail(ErrorKind::InvalidArgument, "unknown arrangement kind");
}

void clear_chi_cache() { chi_cache().clear(); }
std::size_t chi_cache_size() { return chi_cache().size(); }

std::int64_t count_points_mod_p(const GainGraph& g, std::uint32_t p) {
  if (!g.group().is_integers()) fail(ErrorKind::Precondition, "point counting needs integer gains");
  const std::size_t l = g.num_vertices();
  if (l == 0) return 1;
  if (l == 1) return p;
  const std::int64_t pp = p;
  // forbid[b] lists (a, g) for edges with a < b: x_a - x_b != g.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> forbid(l);
  for (const auto& e : g.edges()) {
    std::int64_t r = e.g % pp;
    forbid[g.index_of(e.j)].push_back({g.index_of(e.i), r < 0 ? r + pp : r});
  }
  std::vector<std::int64_t> x(l, 0);
  std::vector<std::uint32_t> stamp(p, 0);
  std::uint32_t clock = 0;
  std::int64_t total = 0;
  // x_0 = 0 by translation invariance along (1, ..., 1).
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == l - 1) {
      ++clock;
      std::int64_t bad = 0;
      for (auto [a, h] : forbid[v]) {
        std::int64_t y = (x[a] - h + pp) % pp;
        if (stamp[y] != clock) {
          stamp[y] = clock;
          ++bad;
        }
      }
      total += pp - bad;
      return;
    }
    for (std::int64_t val = 0; val < pp; ++val) {
      bool ok = true;
      for (auto [a, h] : forbid[v]) {
        if ((x[a] - val - h) % pp == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      x[v] = val;
      self(self, v + 1);
    }
  };
  rec(rec, 1);
  return total * pp;
}

IntPolynomial chi_finite_field_oracle(const GainGraph& g, const FiniteFieldOptions& opts) {
  if (!g.group().is_integers()) fail(ErrorKind::Precondition, "finite field oracle needs integer gains");
  const std::size_t l = g.num_vertices();
  if (l > opts.max_vertices) {
    fail(ErrorKind::BoundExceeded, "finite field oracle limited to " + std::to_string(opts.max_vertices) + " vertices");
  }
  std::int64_t maxg = 0;
  for (const auto& e : g.edges()) maxg = std::max<std::int64_t>(maxg, std::llabs(e.g));
  std::int64_t bound = 2 * static_cast<std::int64_t>(l) * maxg + static_cast<std::int64_t>(l);
  std::vector<std::uint32_t> primes;
  for (std::int64_t c = bound + 1; primes.size() < l + 1 + opts.control_primes; ++c) {
    if (is_prime(static_cast<std::uint64_t>(c))) primes.push_back(static_cast<std::uint32_t>(c));
  }
  std::vector<BigRational> xs, ys;
  for (std::size_t k = 0; k <= l; ++k) {
    xs.emplace_back(static_cast<long>(primes[k]));
    ys.emplace_back(static_cast<long>(count_points_mod_p(g, primes[k])));
  }
  // Lagrange interpolation through l + 1 points.
  std::vector<BigRational> coeffs(l + 1, BigRational(0));
  for (std::size_t k = 0; k <= l; ++k) {
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom(1);
    for (std::size_t m = 0; m <= l; ++m) {
      if (m == k) continue;
      std::vector<BigRational> next(basis.size() + 1, BigRational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[m];
      }
      basis = std::move(next);
      denom *= xs[k] - xs[m];
    }
    for (std::size_t d = 0; d <= l; ++d) coeffs[d] += ys[k] * basis[d] / denom;
  }
  std::vector<Checked64> ints;
  for (auto& c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      fail(ErrorKind::Verification, "point counts do not interpolate to an integer polynomial");
    }
    ints.emplace_back(c.get_num().get_si());
  }
  IntPolynomial chi(std::move(ints));
  for (std::size_t k = l + 1; k < primes.size(); ++k) {
    if (chi.evaluate(primes[k]) != count_points_mod_p(g, primes[k])) {
      fail(ErrorKind::Verification, "control prime " + std::to_string(primes[k]) + " disagrees with interpolation");
    }
  }
  return chi;
}

std::int64_t region_count(const IntPolynomial& chi, std::size_t ambient_dim) {
  std::int64_t v = chi.evaluate(-1);
  return ambient_dim % 2 ? -v : v;
}

}  // namespace gainarr
