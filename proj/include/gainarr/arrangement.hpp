#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gainarr/gain_graph.hpp"
#include "gainarr/scalar.hpp"

namespace gainarr {

/// {x : a . x = c}, scaled so that the first nonzero coefficient is 1.
class Hyperplane {
 public:
  Hyperplane(std::vector<Scalar> coeffs, Scalar constant);

  const std::vector<Scalar>& coeffs() const { return a_; }
  const Scalar& constant() const { return c_; }
  std::size_t dim() const { return a_.size(); }
  Domain domain() const { return c_.domain(); }
  /// Index of the first nonzero coefficient.
  std::size_t pivot() const { return pivot_; }
  bool is_linear() const { return c_.is_zero(); }

  std::string to_string() const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.a_ == b.a_ && a.c_ == b.c_; }

 private:
  std::vector<Scalar> a_;
  Scalar c_;
  std::size_t pivot_ = 0;
};

class Arrangement {
 public:
  Arrangement(std::size_t dim, Domain domain) : dim_(dim), domain_(domain) {}

  std::size_t dim() const { return dim_; }
  Domain domain() const { return domain_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hs_; }
  std::size_t size() const { return hs_.size(); }
  bool empty() const { return hs_.empty(); }
  bool is_central() const;

  /// Appends h unless an equal hyperplane is present. Returns whether it was added.
  bool add(Hyperplane h);
  /// Position of h, or size() if absent.
  std::size_t find(const Hyperplane& h) const;
  /// The arrangement with hyperplane `index` removed.
  Arrangement without(std::size_t index) const;

  /// Rows (a | -c) of the homogenized forms, one per hyperplane.
  std::vector<std::vector<Scalar>> homogeneous_rows() const;

  std::string to_string() const;

 private:
  std::size_t dim_;
  Domain domain_;
  std::vector<Hyperplane> hs_;
};

/// Positive multiplicity per hyperplane, aligned with Arrangement::hyperplanes().
struct Multiarrangement {
  Arrangement arrangement;
  std::vector<int> multiplicity;

  int total() const;
};

/// Coordinate domain of A(Gamma): Q for integer gains, F_p otherwise.
Domain affinographic_domain(const GainGroup& g);
/// Coordinate domain of B(Gamma): Q(q) for integer gains, Q(zeta_p) otherwise.
Domain bias_domain(const GainGroup& g);

/// x_i - x_j = g for each edge class [i,j,g]; coordinates follow the vertex order.
Arrangement build_affinographic(const GainGraph& g);
/// Homogenized a.x - c z = 0 for each hyperplane plus z = 0; z is the last coordinate.
Arrangement build_cone(const Arrangement& a);
/// Coordinate hyperplanes x_1..x_l, then x_i - q^g x_j = 0 per edge class.
Arrangement build_bias(const GainGraph& g);

/// Hyperplanes containing the intersection of the hyperplanes listed in
/// `defining` (indices into A). The empty list gives the ambient space.
Arrangement localization(const Arrangement& a, const std::vector<std::size_t>& defining);

/// A^H in coordinates on H obtained by eliminating H's pivot variable.
Arrangement restriction(const Arrangement& a, std::size_t h_index);

/// Restriction to H with multiplicity m(X) = #{K != H : K cap H = X}.
Multiarrangement ziegler_restriction(const Arrangement& a, std::size_t h_index);

/// Central arrangement re-expressed on the row space of its forms, in the
/// coordinates given by the reduced row echelon basis of that space.
Arrangement essentialize(const Arrangement& a);

/// Rank of the coefficient matrix (for central arrangements, the rank of A).
std::size_t arrangement_rank(const Arrangement& a);

}  // namespace gainarr
