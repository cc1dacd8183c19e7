#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gainarr/checked_int.hpp"

namespace gainarr {

/// Univariate polynomial in t with exact integer coefficients, stored in
/// ascending degree. Arithmetic is overflow-checked; characteristic
/// polynomials at desk scale stay far inside 64 bits.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> ascending);
  explicit IntPolynomial(std::vector<Checked64> ascending);

  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial monomial(std::int64_t c, int degree);
  /// (t - r)^k
  static IntPolynomial power_of_linear(std::int64_t r, int k);
  /// prod (t - r) over the given roots.
  static IntPolynomial from_roots(const std::vector<std::int64_t>& roots);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int k) const;
  std::vector<std::int64_t> coefficients() const;
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back().value(); }
  bool is_monic() const { return leading() == 1; }

  std::int64_t evaluate(std::int64_t t) const;
  /// p(t + s) by binomial re-expansion.
  IntPolynomial shifted(std::int64_t s) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Exact quotient when `divisor` divides this polynomial over Q with an
  /// integer quotient; nullopt otherwise.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;
  /// Divisibility over Q[t].
  bool divisible_by(const IntPolynomial& divisor) const;

  /// Integer roots with multiplicity, ascending, plus the leftover factor
  /// with no integer roots.
  std::vector<std::int64_t> integer_roots(IntPolynomial* rest = nullptr) const;

  /// Plain form, e.g. "t^3 - 3*t^2 + 3*t".
  std::string to_string() const;
  /// Factored form when the polynomial splits over Z, e.g. "t*(t - 1)^2";
  /// otherwise the plain form with any integer linear factors pulled out.
  std::string to_factored_string() const;

 private:
  void trim();
  std::vector<Checked64> c_;
};

}  // namespace gainarr
