#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gainarr/arrangement.hpp"
#include "gainarr/freeness.hpp"
#include "gainarr/gain_graph.hpp"
#include "gainarr/scalar.hpp"

namespace gainarr {

/// Lines a x + b y = 0 in the plane with multiplicities.
struct Multiarrangement2D {
  Domain domain = Domain::rational();
  std::vector<std::array<Scalar, 2>> forms;
  std::vector<int> multiplicity;

  int total() const;
  std::size_t size() const { return forms.size(); }
  /// Throws unless there is at least one line, every multiplicity is
  /// positive and no two forms are proportional.
  void validate() const;

  static Multiarrangement2D from(const Multiarrangement& m);
};

/// x^{s+1} y^{t+1} prod_{g in gains} (x - q^g y) over Q(q).
Multiarrangement2D q_power_multiarrangement(int s, int t, const std::vector<Gain>& gains);
/// Lines y, x, x - y, x - 2y, ... with the given multiplicities.
Multiarrangement2D lines_multiarrangement(const std::vector<int>& multiplicity, Domain domain = Domain::rational());

struct Exp2 {
  int d1 = 0;
  int d2 = 0;
  friend bool operator==(const Exp2&, const Exp2&) = default;
};

struct Exp2Options {
  int max_total = 30;
  bool saito_check = true;
};

/// d1 is the least degree carrying a nonzero logarithmic derivation, found
/// by exact linear algebra; d2 = |m| - d1. With `saito_check` a degree-d1
/// and a degree-d2 derivation are produced and their coefficient
/// determinant is checked to be a nonzero multiple of the defining
/// polynomial.
Exp2 exp2_solver(const Multiarrangement2D& m, const Exp2Options& opts = {});

enum class Exp2Formula { ManyLines, ThreeLines, QPowers };

/// Closed forms for exponents. Throws Precondition when the instance does
/// not have the required shape.
Exp2 exp2_closed_form(const Multiarrangement2D& m, Exp2Formula which);
Exp2 exp2_many_lines(int n, int total);
Exp2 exp2_three_lines(int m1, int m2, int m3);
Exp2 exp2_q_powers(int s, int t, int u);

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  explicit Partition(std::vector<int> parts);
  std::size_t length() const { return parts.size(); }
};

/// Compares the alternant det(x_i^{lambda_j + n - j}) with s_lambda times
/// the Vandermonde determinant at x_i = q^{g_i}, n = |gains| >= length.
/// s_lambda is computed from semistandard tableaux. True iff they agree and
/// both are nonzero. Repeated gains throw.
bool schur_bialternant_check(const Partition& lambda, const std::vector<Gain>& gains);

struct Free3Result {
  bool free = false;
  std::string chi;
  std::optional<ExponentMultiset> exponents;  // when free
  std::optional<Exp2> ziegler;                // when chi splits
  std::string reason;                          // when not free
};

/// Yoshinaga's test for a central rank-3 arrangement in dimension 3 with
/// respect to hyperplane `h`.
Free3Result yoshinaga_free3(const Arrangement& a, std::size_t h);

struct Coincidence3 {
  Free3Result cone;
  Free3Result bias;
};

/// Freeness of c A(G) (restricted to z = 0 after essentializing) and of
/// B(G) (restricted to x_3 = 0) for a three-vertex integer-gain graph.
/// Throws Verification if the two verdicts differ.
Coincidence3 coincidence_3dim(const GainGraph& g);

}  // namespace gainarr
