#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gainarr/bigint.hpp"
#include "gainarr/laurent.hpp"

namespace gainarr {

enum class DomainKind : std::uint8_t {
  Rational,          // Q
  PrimeField,        // F_p
  RationalFunction,  // Q(q), q a formal indeterminate
  Cyclotomic,        // Q(zeta_p)
};

/// Scalar domain tag. `p` is meaningful for PrimeField and Cyclotomic only.
struct Domain {
  DomainKind kind = DomainKind::Rational;
  std::uint32_t p = 0;

  static Domain rational() { return {DomainKind::Rational, 0}; }
  static Domain prime_field(std::uint32_t p);
  static Domain rational_function() { return {DomainKind::RationalFunction, 0}; }
  static Domain cyclotomic(std::uint32_t p);

  /// Characteristic of the field (0 or p).
  std::uint32_t characteristic() const { return kind == DomainKind::PrimeField ? p : 0; }
  std::string name() const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

bool is_prime(std::uint64_t n);

/// Element of Q(q) in lowest terms: num/den with integer-coefficient
/// Laurent numerator, den an ordinary polynomial with nonzero constant term
/// and positive leading coefficient, no common polynomial factor, and the
/// joint integer content of num and den equal to 1.
class RationalFunction {
 public:
  RationalFunction() : den_(LaurentZ::constant(1)) {}
  explicit RationalFunction(LaurentZ num) : num_(std::move(num)), den_(LaurentZ::constant(1)) {
    normalize();
  }
  RationalFunction(LaurentZ num, LaurentZ den);

  const LaurentZ& num() const { return num_; }
  const LaurentZ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at q = x (x a nonzero rational that is not a pole).
  BigRational evaluate(const BigRational& x) const;
  std::string to_string() const;

 private:
  void normalize();

  LaurentZ num_;
  LaurentZ den_;
};

/// Primitive gcd of two integer polynomials (lowest exponent 0), positive
/// leading coefficient. Exposed for tests.
LaurentZ primitive_gcd(const LaurentZ& a, const LaurentZ& b);

/// Element of Q(zeta_p) = Q[x]/(1 + x + ... + x^{p-1}) in the power basis
/// 1, x, ..., x^{p-2}.
class CyclotomicElem {
 public:
  CyclotomicElem() = default;
  explicit CyclotomicElem(std::uint32_t p);
  CyclotomicElem(std::uint32_t p, std::vector<BigRational> coeffs);

  /// zeta_p^k, any integer k.
  static CyclotomicElem zeta_power(std::uint32_t p, std::int64_t k);

  std::uint32_t p() const { return p_; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  bool is_zero() const;

  CyclotomicElem operator-() const;
  CyclotomicElem inverse() const;
  friend CyclotomicElem operator+(const CyclotomicElem& a, const CyclotomicElem& b);
  friend CyclotomicElem operator-(const CyclotomicElem& a, const CyclotomicElem& b);
  friend CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b);
  friend bool operator==(const CyclotomicElem& a, const CyclotomicElem& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  std::string to_string() const;

 private:
  std::uint32_t p_ = 2;
  std::vector<BigRational> c_;
};

struct Residue {
  std::uint64_t v = 0;
  std::uint32_t p = 2;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Exact scalar in one of the four supported domains. Immutable value type.
class Scalar {
 public:
  Scalar() : value_(BigRational(0)) {}
  explicit Scalar(BigRational r) : value_(std::move(r)) { std::get<BigRational>(value_).canonicalize(); }
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(RationalFunction f) : value_(std::move(f)) {}
  explicit Scalar(CyclotomicElem c) : value_(std::move(c)) {}

  static Scalar zero(Domain d) { return from_int(0, d); }
  static Scalar one(Domain d) { return from_int(1, d); }
  static Scalar from_int(std::int64_t n, Domain d);
  static Scalar rational(std::int64_t num, std::int64_t den = 1);
  static Scalar residue(std::int64_t v, std::uint32_t p);
  /// q^g in Q(q).
  static Scalar q_power(std::int64_t g);
  /// zeta_p^g in Q(zeta_p).
  static Scalar zeta_power(std::int64_t g, std::uint32_t p);

  Domain domain() const;
  bool is_zero() const;
  bool is_one() const { return *this == one(domain()); }

  const BigRational& as_rational() const { return std::get<BigRational>(value_); }
  const Residue& as_residue() const { return std::get<Residue>(value_); }
  const RationalFunction& as_rational_function() const { return std::get<RationalFunction>(value_); }
  const CyclotomicElem& as_cyclotomic() const { return std::get<CyclotomicElem>(value_); }

  Scalar operator-() const;
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  std::string to_string() const;

 private:
  std::variant<BigRational, Residue, RationalFunction, CyclotomicElem> value_;
};

enum class ScalarOp { Add, Mul, Neg, Inv };

/// Single entry point for the four field operations; `b` is ignored for the
/// unary ones.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

/// Dense matrix over a single scalar domain.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Domain domain);
  Matrix(std::vector<std::vector<Scalar>> rows, Domain domain);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Domain domain() const { return domain_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v);
  std::vector<Scalar> row(std::size_t r) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Domain domain_;
  std::vector<Scalar> data_;
};

/// Rank over the domain's field, by fraction-free elimination where the
/// domain admits an integral model and exact field elimination otherwise.
std::size_t matrix_rank(const Matrix& m);

/// Rank by plain Gaussian elimination with field operations on Scalar.
/// Slower; kept as an independent route for cross-checks.
std::size_t matrix_rank_field(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Reduced row echelon form in place (zero rows sink to the bottom);
/// returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Scalar>>& rows, std::size_t cols);

/// Basis of the right nullspace {v : M v = 0}.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

}  // namespace gainarr
