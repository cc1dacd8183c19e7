#include "gainarr/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "gainarr/error.hpp"

namespace gainarr {

Hyperplane::Hyperplane(std::vector<Scalar> coeffs, Scalar constant) : a_(std::move(coeffs)), c_(std::move(constant)) {
  Domain d = c_.domain();
  for (const auto& v : a_) {
    if (v.domain() != d) fail(ErrorKind::DomainMismatch, "hyperplane coefficients from different domains");
  }
  pivot_ = 0;
  while (pivot_ < a_.size() && a_[pivot_].is_zero()) ++pivot_;
  if (pivot_ == a_.size()) fail(ErrorKind::InvalidArgument, "hyperplane with zero coefficient vector");
  if (!a_[pivot_].is_one()) {
    Scalar inv = a_[pivot_].inverse();
    for (auto& v : a_) v *= inv;
    c_ *= inv;
  }
}

std::string Hyperplane::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < a_.size(); ++k) out += (k ? ", " : "") + a_[k].to_string();
  return out + " | " + c_.to_string() + "]";
}

bool Arrangement::is_central() const {
  return std::all_of(hs_.begin(), hs_.end(), [](const Hyperplane& h) { return h.is_linear(); });
}

bool Arrangement::add(Hyperplane h) {
  if (h.dim() != dim_) fail(ErrorKind::InvalidArgument, "hyperplane dimension does not match the arrangement");
  if (h.domain() != domain_) fail(ErrorKind::DomainMismatch, "hyperplane domain does not match the arrangement");
  if (find(h) != hs_.size()) return false;
  hs_.push_back(std::move(h));
  return true;
}

std::size_t Arrangement::find(const Hyperplane& h) const {
  for (std::size_t k = 0; k < hs_.size(); ++k) {
    if (hs_[k] == h) return k;
  }
  return hs_.size();
}

Arrangement Arrangement::without(std::size_t index) const {
  if (index >= hs_.size()) fail(ErrorKind::InvalidArgument, "hyperplane index out of range");
  Arrangement out(dim_, domain_);
  for (std::size_t k = 0; k < hs_.size(); ++k) {
    if (k != index) out.hs_.push_back(hs_[k]);
  }
  return out;
}

std::vector<std::vector<Scalar>> Arrangement::homogeneous_rows() const {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(hs_.size());
  for (const auto& h : hs_) {
    std::vector<Scalar> r = h.coeffs();
    r.push_back(-h.constant());
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string Arrangement::to_string() const {
  std::string out = "arrangement in dimension " + std::to_string(dim_) + " over " + domain_.name() + "\n";
  for (const auto& h : hs_) out += "  " + h.to_string() + "\n";
  return out;
}

int Multiarrangement::total() const { return std::accumulate(multiplicity.begin(), multiplicity.end(), 0); }

Domain affinographic_domain(const GainGroup& g) {
  return g.is_integers() ? Domain::rational() : Domain::prime_field(g.p);
}

Domain bias_domain(const GainGroup& g) {
  return g.is_integers() ? Domain::rational_function() : Domain::cyclotomic(g.p);
}

Arrangement build_affinographic(const GainGraph& g) {
  Domain d = affinographic_domain(g.group());
  const std::size_t l = g.num_vertices();
  Arrangement out(l, d);
  for (const auto& e : g.edges()) {
    std::vector<Scalar> a(l, Scalar::zero(d));
    a[g.index_of(e.i)] = Scalar::one(d);
    a[g.index_of(e.j)] = Scalar::from_int(-1, d);
    out.add(Hyperplane(std::move(a), Scalar::from_int(e.g, d)));
  }
  return out;
}

Arrangement build_cone(const Arrangement& a) {
  Domain d = a.domain();
  Arrangement out(a.dim() + 1, d);
  for (const auto& h : a.hyperplanes()) {
    std::vector<Scalar> c = h.coeffs();
    c.push_back(-h.constant());
    out.add(Hyperplane(std::move(c), Scalar::zero(d)));
  }
  std::vector<Scalar> z(a.dim() + 1, Scalar::zero(d));
  z.back() = Scalar::one(d);
  out.add(Hyperplane(std::move(z), Scalar::zero(d)));
  return out;
}

Arrangement build_bias(const GainGraph& g) {
  Domain d = bias_domain(g.group());
  const std::size_t l = g.num_vertices();
  Arrangement out(l, d);
  for (std::size_t k = 0; k < l; ++k) {
    std::vector<Scalar> a(l, Scalar::zero(d));
    a[k] = Scalar::one(d);
    out.add(Hyperplane(std::move(a), Scalar::zero(d)));
  }
  for (const auto& e : g.edges()) {
    std::vector<Scalar> a(l, Scalar::zero(d));
    a[g.index_of(e.i)] = Scalar::one(d);
    a[g.index_of(e.j)] = g.group().is_integers() ? -Scalar::q_power(e.g) : -Scalar::zeta_power(e.g, g.group().p);
    out.add(Hyperplane(std::move(a), Scalar::zero(d)));
  }
  return out;
}

namespace {

bool annihilates(const std::vector<Scalar>& row, const std::vector<std::vector<Scalar>>& kernel) {
  for (const auto& v : kernel) {
    Scalar s = Scalar::zero(row[0].domain());
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_zero() && !v[k].is_zero()) s += row[k] * v[k];
    }
    if (!s.is_zero()) return false;
  }
  return true;
}

// Substitutes x_pivot = c - sum_{m != pivot} a_m x_m into k; nullopt when
// the image is empty or all of H.
std::optional<Hyperplane> cut(const Hyperplane& h, const Hyperplane& k) {
  const std::size_t p = h.pivot();
  const Scalar& bk = k.coeffs()[p];
  std::vector<Scalar> coeffs;
  coeffs.reserve(h.dim() - 1);
  bool nonzero = false;
  for (std::size_t m = 0; m < h.dim(); ++m) {
    if (m == p) continue;
    Scalar v = bk.is_zero() ? k.coeffs()[m] : k.coeffs()[m] - bk * h.coeffs()[m];
    nonzero = nonzero || !v.is_zero();
    coeffs.push_back(std::move(v));
  }
  if (!nonzero) return std::nullopt;
  Scalar c = bk.is_zero() ? k.constant() : k.constant() - bk * h.constant();
  return Hyperplane(std::move(coeffs), std::move(c));
}

}  // namespace

Arrangement localization(const Arrangement& a, const std::vector<std::size_t>& defining) {
  Domain d = a.domain();
  auto all_rows = a.homogeneous_rows();
  Arrangement out(a.dim(), d);
  if (defining.empty()) return out;
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t k : defining) {
    if (k >= a.size()) fail(ErrorKind::InvalidArgument, "hyperplane index out of range");
    rows.push_back(all_rows[k]);
  }
  auto kernel = nullspace(Matrix(rows, d));
  bool nonempty = std::any_of(kernel.begin(), kernel.end(), [](const auto& v) { return !v.back().is_zero(); });
  if (!nonempty) fail(ErrorKind::InvalidArgument, "the listed hyperplanes have empty intersection");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (annihilates(all_rows[k], kernel)) out.add(a.hyperplanes()[k]);
  }
  return out;
}

Arrangement restriction(const Arrangement& a, std::size_t h_index) {
  if (h_index >= a.size()) fail(ErrorKind::InvalidArgument, "hyperplane index out of range");
  if (a.dim() == 0) fail(ErrorKind::InvalidArgument, "restriction in dimension 0");
  const Hyperplane& h = a.hyperplanes()[h_index];
  Arrangement out(a.dim() - 1, a.domain());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == h_index) continue;
    if (auto c = cut(h, a.hyperplanes()[k])) out.add(std::move(*c));
  }
  return out;
}

Multiarrangement ziegler_restriction(const Arrangement& a, std::size_t h_index) {
  if (!a.is_central()) fail(ErrorKind::Precondition, "Ziegler restriction needs a central arrangement");
  if (h_index >= a.size()) fail(ErrorKind::InvalidArgument, "hyperplane index out of range");
  const Hyperplane& h = a.hyperplanes()[h_index];
  Multiarrangement out{Arrangement(a.dim() - 1, a.domain()), {}};
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == h_index) continue;
    auto c = cut(h, a.hyperplanes()[k]);
    if (!c) continue;
    std::size_t pos = out.arrangement.find(*c);
    if (pos == out.arrangement.size()) {
      out.arrangement.add(std::move(*c));
      out.multiplicity.push_back(1);
    } else {
      ++out.multiplicity[pos];
    }
  }
  return out;
}

Arrangement essentialize(const Arrangement& a) {
  if (!a.is_central()) fail(ErrorKind::Precondition, "essentialize needs a central arrangement");
  Domain d = a.domain();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& h : a.hyperplanes()) rows.push_back(h.coeffs());
  std::vector<std::size_t> pivots;
  if (!rows.empty()) pivots = row_reduce(rows, a.dim());
  Arrangement out(pivots.size(), d);
  for (const auto& h : a.hyperplanes()) {
    std::vector<Scalar> lambda;
    lambda.reserve(pivots.size());
    for (std::size_t p : pivots) lambda.push_back(h.coeffs()[p]);
    out.add(Hyperplane(std::move(lambda), Scalar::zero(d)));
  }
  return out;
}

std::size_t arrangement_rank(const Arrangement& a) {
  if (a.empty()) return 0;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& h : a.hyperplanes()) rows.push_back(h.coeffs());
  return matrix_rank(Matrix(rows, a.domain()));
}

}  // namespace gainarr
