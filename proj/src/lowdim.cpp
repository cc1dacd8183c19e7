#include "gainarr/lowdim.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "gainarr/charpoly.hpp"
#include "gainarr/error.hpp"

namespace gainarr {

int Multiarrangement2D::total() const { return std::accumulate(multiplicity.begin(), multiplicity.end(), 0); }

void Multiarrangement2D::validate() const {
  if (forms.empty()) fail(ErrorKind::InvalidArgument, "a multiarrangement needs at least one line");
  if (forms.size() != multiplicity.size()) fail(ErrorKind::InvalidArgument, "one multiplicity per line");
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (multiplicity[k] < 1) fail(ErrorKind::InvalidArgument, "multiplicities must be positive");
    if (forms[k][0].domain() != domain || forms[k][1].domain() != domain) {
      fail(ErrorKind::DomainMismatch, "line coefficients outside the multiarrangement's domain");
    }
    if (forms[k][0].is_zero() && forms[k][1].is_zero()) fail(ErrorKind::InvalidArgument, "zero linear form");
    for (std::size_t j = 0; j < k; ++j) {
      if ((forms[k][0] * forms[j][1] - forms[k][1] * forms[j][0]).is_zero()) {
        fail(ErrorKind::InvalidArgument, "proportional lines; merge them and add multiplicities");
      }
    }
  }
}

Multiarrangement2D Multiarrangement2D::from(const Multiarrangement& m) {
  if (m.arrangement.dim() != 2 || !m.arrangement.is_central()) {
    fail(ErrorKind::InvalidArgument, "expected a central multiarrangement in the plane");
  }
  Multiarrangement2D out;
  out.domain = m.arrangement.domain();
  for (const auto& h : m.arrangement.hyperplanes()) out.forms.push_back({h.coeffs()[0], h.coeffs()[1]});
  out.multiplicity = m.multiplicity;
  out.validate();
  return out;
}

Multiarrangement2D q_power_multiarrangement(int s, int t, const std::vector<Gain>& gains) {
  if (s < 0 || t < 0) fail(ErrorKind::InvalidArgument, "s and t must be nonnegative");
  Domain d = Domain::rational_function();
  Multiarrangement2D m;
  m.domain = d;
  m.forms.push_back({Scalar::one(d), Scalar::zero(d)});
  m.multiplicity.push_back(s + 1);
  m.forms.push_back({Scalar::zero(d), Scalar::one(d)});
  m.multiplicity.push_back(t + 1);
  for (Gain g : gains) {
    m.forms.push_back({Scalar::one(d), -Scalar::q_power(g)});
    m.multiplicity.push_back(1);
  }
  m.validate();
  return m;
}

Multiarrangement2D lines_multiarrangement(const std::vector<int>& multiplicity, Domain domain) {
  Multiarrangement2D m;
  m.domain = domain;
  for (std::size_t k = 0; k < multiplicity.size(); ++k) {
    if (k == 0) {
      m.forms.push_back({Scalar::zero(domain), Scalar::one(domain)});
    } else {
      m.forms.push_back({Scalar::one(domain), Scalar::from_int(-static_cast<std::int64_t>(k - 1), domain)});
    }
  }
  m.multiplicity = multiplicity;
  m.validate();
  return m;
}

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Scalar power(const Scalar& x, int e) {
  Scalar r = Scalar::one(x.domain());
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

// Conditions on (p_0..p_d, q_0..q_d), P = sum p_i x^{d-i} y^i, that
// a P + b Q vanish to order m along each line a x + b y = 0.
Matrix derivation_conditions(const Multiarrangement2D& m, int d) {
  const Domain dom = m.domain;
  const std::size_t n = static_cast<std::size_t>(d + 1);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t h = 0; h < m.size(); ++h) {
    const Scalar& a = m.forms[h][0];
    const Scalar& b = m.forms[h][1];
    const int orders = std::min(m.multiplicity[h], d + 1);
    if (a.is_zero()) {
      // The line is y = 0: the coefficients of y^k, k < m, vanish.
      for (int k = 0; k < orders; ++k) {
        std::vector<Scalar> row(2 * n, Scalar::zero(dom));
        row[n + static_cast<std::size_t>(k)] = b;
        rows.push_back(std::move(row));
      }
      continue;
    }
    // Substitute x = X - c y with c = b / a; the line becomes X = 0.
    const Scalar minus_c = -(b / a);
    for (int k = 0; k < orders; ++k) {
      std::vector<Scalar> row(2 * n, Scalar::zero(dom));
      for (int i = 0; i + k <= d; ++i) {
        const Scalar coef = Scalar::from_int(binom(d - i, k), dom) * power(minus_c, d - i - k);
        row[static_cast<std::size_t>(i)] = a * coef;
        row[n + static_cast<std::size_t>(i)] = b * coef;
      }
      rows.push_back(std::move(row));
    }
  }
  return Matrix(std::move(rows), dom);
}

using Binary = std::vector<Scalar>;  // coefficient of x^{deg-i} y^i at i

Binary multiply(const Binary& f, const Binary& g, Domain dom) {
  Binary out(f.size() + g.size() - 1, Scalar::zero(dom));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

bool proportional_nonzero(const Binary& f, const Binary& g) {
  if (f.size() != g.size()) return false;
  std::size_t k = 0;
  while (k < f.size() && g[k].is_zero()) ++k;
  if (k == f.size() || f[k].is_zero()) return false;
  const Scalar ratio = f[k] / g[k];
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!(f[j] == ratio * g[j])) return false;
  }
  return true;
}

Binary determinant_of(const std::vector<Scalar>& t1, int d1, const std::vector<Scalar>& t2, int d2, Domain dom) {
  const auto n1 = static_cast<std::ptrdiff_t>(d1 + 1);
  const auto n2 = static_cast<std::ptrdiff_t>(d2 + 1);
  Binary p1(t1.begin(), t1.begin() + n1), q1(t1.begin() + n1, t1.end());
  Binary p2(t2.begin(), t2.begin() + n2), q2(t2.begin() + n2, t2.end());
  Binary a = multiply(p1, q2, dom), b = multiply(p2, q1, dom);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

void saito_assertion(const Multiarrangement2D& m, int d1, int d2) {
  const Domain dom = m.domain;
  const auto k1 = nullspace(derivation_conditions(m, d1));
  const auto k2 = nullspace(derivation_conditions(m, d2));
  if (k1.empty() || k2.empty()) fail(ErrorKind::Verification, "no derivation in an exponent degree");
  Binary q{Scalar::one(dom)};
  for (std::size_t h = 0; h < m.size(); ++h) {
    for (int r = 0; r < m.multiplicity[h]; ++r) q = multiply(q, {m.forms[h][0], m.forms[h][1]}, dom);
  }
  for (const auto& v : k2) {
    Binary det = determinant_of(k1.front(), d1, v, d2, dom);
    if (std::all_of(det.begin(), det.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    if (!proportional_nonzero(det, q)) {
      fail(ErrorKind::Verification, "derivation determinant is not a multiple of the defining polynomial");
    }
    return;
  }
  fail(ErrorKind::Verification, "no second basis derivation in degree " + std::to_string(d2));
}

}  // namespace

Exp2 exp2_solver(const Multiarrangement2D& m, const Exp2Options& opts) {
  m.validate();
  const int total = m.total();
  if (total > opts.max_total) {
    fail(ErrorKind::BoundExceeded, "|m| = " + std::to_string(total) + " exceeds " + std::to_string(opts.max_total));
  }
  for (int d = 0; d <= total; ++d) {
    const std::size_t unknowns = 2 * static_cast<std::size_t>(d + 1);
    if (matrix_rank(derivation_conditions(m, d)) < unknowns) {
      Exp2 e{d, total - d};
      if (e.d2 < e.d1) fail(ErrorKind::Verification, "lowest derivation degree exceeds |m|/2");
      if (opts.saito_check) saito_assertion(m, e.d1, e.d2);
      return e;
    }
  }
  fail(ErrorKind::Verification, "no logarithmic derivation up to degree |m|");
}

Exp2 exp2_many_lines(int n, int total) {
  if (n < 1 || 2 * n < total + 2) fail(ErrorKind::Precondition, "many-lines form needs n >= |m|/2 + 1");
  return {total - n + 1, n - 1};
}

Exp2 exp2_three_lines(int m1, int m2, int m3) {
  std::array<int, 3> m{m1, m2, m3};
  if (std::any_of(m.begin(), m.end(), [](int v) { return v < 1; })) {
    fail(ErrorKind::Precondition, "multiplicities must be positive");
  }
  std::sort(m.begin(), m.end(), std::greater<>());
  const int total = m[0] + m[1] + m[2];
  if (m[0] >= m[1] + m[2]) return {m[1] + m[2], m[0]};
  const int k = total / 2;
  return total % 2 ? Exp2{k, k + 1} : Exp2{k, k};
}

Exp2 exp2_q_powers(int s, int t, int u) {
  if (s < 0 || s > t || t > u) fail(ErrorKind::Precondition, "q-powers form needs 0 <= s <= t <= u");
  if (u >= s + t) return {s + t + 1, u + 1};
  const int k = (s + t + u) / 2;
  return (s + t + u) % 2 ? Exp2{k + 1, k + 2} : Exp2{k + 1, k + 1};
}

Exp2 exp2_closed_form(const Multiarrangement2D& m, Exp2Formula which) {
  m.validate();
  switch (which) {
    case Exp2Formula::ManyLines:
      return exp2_many_lines(static_cast<int>(m.size()), m.total());
    case Exp2Formula::ThreeLines:
      if (m.size() != 3) fail(ErrorKind::Precondition, "three-lines form needs exactly three lines");
      if (m.domain.kind == DomainKind::PrimeField) fail(ErrorKind::Precondition, "three-lines form needs characteristic 0");
      return exp2_three_lines(m.multiplicity[0], m.multiplicity[1], m.multiplicity[2]);
    case Exp2Formula::QPowers: {
      if (m.domain.kind != DomainKind::RationalFunction) fail(ErrorKind::Precondition, "q-powers form needs Q(q)");
      int mx = 0, my = 0, u = 0;
      for (std::size_t h = 0; h < m.size(); ++h) {
        const Scalar& a = m.forms[h][0];
        const Scalar& b = m.forms[h][1];
        if (b.is_zero()) {
          mx = m.multiplicity[h];
        } else if (a.is_zero()) {
          my = m.multiplicity[h];
        } else {
          const RationalFunction r = (-(b / a)).as_rational_function();
          const bool q_power = r.is_polynomial() && r.num().span_degree() == 0 && r.num().leading() == 1;
          if (!q_power || m.multiplicity[h] != 1) {
            fail(ErrorKind::Precondition, "q-powers form needs simple lines x - q^g y");
          }
          ++u;
        }
      }
      if (mx == 0 || my == 0) fail(ErrorKind::Precondition, "q-powers form needs both coordinate lines");
      return exp2_q_powers(std::min(mx, my) - 1, std::max(mx, my) - 1, u);
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown closed form");
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 1 || (k > 0 && parts[k] > parts[k - 1])) {
      fail(ErrorKind::InvalidArgument, "partition parts must be positive and weakly decreasing");
    }
  }
}

namespace {

// Sum over semistandard tableaux of shape lambda, entries 0..n-1, of
// q^{sum of gains of the entries}, as exponent -> count.
std::map<std::int64_t, std::int64_t> schur_monomials(const std::vector<int>& shape, const std::vector<Gain>& gains) {
  const int n = static_cast<int>(gains.size());
  std::vector<std::vector<int>> t(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(static_cast<std::size_t>(shape[r]), 0);
  std::map<std::int64_t, std::int64_t> out;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  }
  auto fill = [&](auto&& self, std::size_t k, std::int64_t weight) -> void {
    if (k == cells.size()) {
      ++out[weight];
      return;
    }
    auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v < n; ++v) {
      t[r][c] = v;
      self(self, k + 1, weight + gains[static_cast<std::size_t>(v)]);
    }
  };
  fill(fill, 0, 0);
  return out;
}

}  // namespace

bool schur_bialternant_check(const Partition& lambda, const std::vector<Gain>& gains) {
  const std::size_t n = gains.size();
  if (n < lambda.length()) fail(ErrorKind::InvalidArgument, "need at least as many variables as parts");
  if (std::set<Gain>(gains.begin(), gains.end()).size() != n) {
    fail(ErrorKind::InvalidArgument, "repeated gains make the Vandermonde determinant vanish");
  }
  const Domain dom = Domain::rational_function();
  std::vector<int> parts = lambda.parts;
  parts.resize(n, 0);
  Matrix alt(n, n, dom);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      alt.set(i, j, Scalar::q_power(gains[i] * (parts[j] + static_cast<Gain>(n - 1 - j))));
    }
  }
  const Scalar a = determinant(alt);
  Scalar s = Scalar::zero(dom);
  for (auto [e, count] : schur_monomials(parts, gains)) s += Scalar::from_int(count, dom) * Scalar::q_power(e);
  Scalar vandermonde = Scalar::one(dom);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) vandermonde *= Scalar::q_power(gains[i]) - Scalar::q_power(gains[j]);
  }
  return !a.is_zero() && !s.is_zero() && a == s * vandermonde;
}

Free3Result yoshinaga_free3(const Arrangement& a, std::size_t h) {
  if (!a.is_central()) fail(ErrorKind::Precondition, "Yoshinaga's test needs a central arrangement");
  if (a.dim() != 3 || arrangement_rank(a) != 3) fail(ErrorKind::InvalidArgument, "Yoshinaga's test needs rank 3 in dimension 3");
  if (h >= a.size()) fail(ErrorKind::InvalidArgument, "hyperplane index out of range");
  Free3Result r;
  const IntPolynomial chi = chi_poset(a);
  r.chi = chi.to_factored_string();
  auto roots = exponents_from_chi(chi, 3);
  if (roots) {
    auto one = std::find(roots->begin(), roots->end(), 1);
    if (one == roots->end()) {
      roots.reset();
    } else {
      roots->erase(one);
    }
  }
  if (!roots) {
    r.reason = "chi does not factor as (t - 1)(t - d1)(t - d2)";
    return r;
  }
  const Exp2 want{static_cast<int>((*roots)[0]), static_cast<int>((*roots)[1])};
  r.ziegler = exp2_solver(Multiarrangement2D::from(ziegler_restriction(a, h)));
  if (!(*r.ziegler == want)) {
    r.reason = "Ziegler restriction exponents (" + std::to_string(r.ziegler->d1) + ", " + std::to_string(r.ziegler->d2) +
               ") differ from (" + std::to_string(want.d1) + ", " + std::to_string(want.d2) + ")";
    return r;
  }
  r.free = true;
  r.exponents = ExponentMultiset{1, want.d1, want.d2};
  return r;
}

Coincidence3 coincidence_3dim(const GainGraph& g) {
  if (g.num_vertices() != 3) fail(ErrorKind::Precondition, "coincidence check needs three vertices");
  if (!g.group().is_integers()) fail(ErrorKind::Precondition, "coincidence check needs integer gains");
  Coincidence3 out;
  const Arrangement cone = build_cone(build_affinographic(g));
  const Arrangement ess = essentialize(cone);
  if (ess.dim() < 3) {
    // Central arrangements of rank at most 2 are free.
    const IntPolynomial chi = chi_poset(ess);
    out.cone.free = true;
    out.cone.chi = chi.to_factored_string();
    out.cone.exponents = exponents_from_chi(chi, ess.dim());
  } else {
    if (ess.size() != cone.size()) fail(ErrorKind::Verification, "essentialization merged hyperplanes");
    out.cone = yoshinaga_free3(ess, ess.size() - 1);  // z = 0 is added last by the cone
  }
  out.bias = yoshinaga_free3(build_bias(g), 2);  // x_3 = 0
  if (out.cone.free != out.bias.free) {
    fail(ErrorKind::Verification, "cone and bias freeness differ for\n" + g.to_string());
  }
  return out;
}

}  // namespace gainarr
