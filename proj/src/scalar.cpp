#include "gainarr/scalar.hpp"

#include <cstdlib>

#include "gainarr/detail/integral_rows.hpp"
#include "gainarr/error.hpp"

namespace gainarr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Domain Domain::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    fail(ErrorKind::InvalidArgument, "prime field needs a prime below 2^31, got " + std::to_string(p));
  }
  return {DomainKind::PrimeField, p};
}

Domain Domain::cyclotomic(std::uint32_t p) {
  if (!is_prime(p) || p > 1000) {
    fail(ErrorKind::InvalidArgument, "cyclotomic field needs a small prime, got " + std::to_string(p));
  }
  return {DomainKind::Cyclotomic, p};
}

std::string Domain::name() const {
  switch (kind) {
    case DomainKind::Rational:
      return "Q";
    case DomainKind::PrimeField:
      return "F_" + std::to_string(p);
    case DomainKind::RationalFunction:
      return "Q(q)";
    case DomainKind::Cyclotomic:
      return "Q(zeta_" + std::to_string(p) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (lowest exponent 0).

namespace {

LaurentZ primitive_part(const LaurentZ& a) {
  if (a.is_zero()) return a;
  BigInt c = a.content();
  if (a.leading() < 0) c = -c;
  return a.divexact_scalar(c);
}

// Pseudo-remainder of a by b, both with lowest exponent 0.
LaurentZ pseudo_remainder(LaurentZ a, const LaurentZ& b) {
  const int db = b.high();
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.high() >= db) {
    BigInt la = a.leading();
    int shift = a.high() - db;
    a = a.scaled(lb) - b.scaled(la).shifted(shift);
  }
  return a;
}

}  // namespace

LaurentZ primitive_gcd(const LaurentZ& a_in, const LaurentZ& b_in) {
  LaurentZ a = a_in.is_zero() ? a_in : primitive_part(a_in.shifted(-a_in.low()));
  LaurentZ b = b_in.is_zero() ? b_in : primitive_part(b_in.shifted(-b_in.low()));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.high() < b.high()) std::swap(a, b);
  while (!b.is_zero()) {
    LaurentZ r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(a);
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(LaurentZ num, LaurentZ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentZ::constant(1);
    return;
  }
  int offset = num_.low() - den_.low();
  LaurentZ n = num_.shifted(-num_.low());
  LaurentZ d = den_.shifted(-den_.low());
  if (d.span_degree() > 0 && n.span_degree() > 0) {
    LaurentZ g = primitive_gcd(n, d);
    if (g.span_degree() > 0) {
      n = divexact(n, g);
      d = divexact(d, g);
    }
  }
  BigInt c = gcd(n.content(), d.content());
  if (d.leading() < 0) c = -c;
  if (c != 1) {
    n = n.divexact_scalar(c);
    d = d.divexact_scalar(c);
  }
  num_ = n.shifted(offset);
  den_ = std::move(d);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(q)");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    RationalFunction r;
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    RationalFunction r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

namespace {

BigRational evaluate_laurent(const LaurentZ& p, const BigRational& x) {
  BigRational acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + BigRational(p.coeffs()[k]);
  int low = p.low();
  BigRational base = low >= 0 ? x : BigRational(1) / x;
  for (int e = std::abs(low); e > 0; --e) acc *= base;
  return acc;
}

}  // namespace

BigRational RationalFunction::evaluate(const BigRational& x) const {
  if (x == 0 && num_.low() < 0) fail(ErrorKind::DivisionByZero, "pole at q = 0");
  BigRational d = evaluate_laurent(den_, x);
  if (d == 0) fail(ErrorKind::DivisionByZero, "pole of rational function");
  BigRational r = evaluate_laurent(num_, x) / d;
  r.canonicalize();
  return r;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// CyclotomicElem

CyclotomicElem::CyclotomicElem(std::uint32_t p) : p_(p), c_(p - 1, BigRational(0)) {}

CyclotomicElem::CyclotomicElem(std::uint32_t p, std::vector<BigRational> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (c_.size() != p - 1) fail(ErrorKind::InvalidArgument, "cyclotomic element needs p-1 coefficients");
  for (auto& c : c_) c.canonicalize();
}

CyclotomicElem CyclotomicElem::zeta_power(std::uint32_t p, std::int64_t k) {
  std::int64_t r = ((k % p) + p) % p;
  CyclotomicElem z(p);
  if (r < static_cast<std::int64_t>(p) - 1) {
    z.c_[r] = 1;
  } else {
    for (auto& c : z.c_) c = -1;
  }
  return z;
}

bool CyclotomicElem::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

CyclotomicElem CyclotomicElem::operator-() const {
  CyclotomicElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CyclotomicElem operator+(const CyclotomicElem& a, const CyclotomicElem& b) {
  CyclotomicElem r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CyclotomicElem operator-(const CyclotomicElem& a, const CyclotomicElem& b) {
  CyclotomicElem r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b) {
  const std::uint32_t p = a.p_;
  // Multiply modulo x^p - 1, then fold x^{p-1} = -(1 + ... + x^{p-2}).
  std::vector<BigRational> full(p, BigRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) full[(i + j) % p] += a.c_[i] * b.c_[j];
  }
  CyclotomicElem r(p);
  for (std::size_t i = 0; i + 1 < p; ++i) r.c_[i] = full[i] - full[p - 1];
  return r;
}

CyclotomicElem CyclotomicElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_p)");
  // Solve (this * b) = 1 for b: column j of the system is this * x^j.
  const std::size_t n = p_ - 1;
  std::vector<std::vector<BigRational>> aug(n, std::vector<BigRational>(n + 1, BigRational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    CyclotomicElem col = *this * zeta_power(p_, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = col.c_[i];
  }
  aug[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorKind::DivisionByZero, "singular cyclotomic multiplication map");
    std::swap(aug[piv], aug[col]);
    BigRational inv = BigRational(1) / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      BigRational f = aug[r][col];
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  CyclotomicElem r(p_);
  for (std::size_t i = 0; i < n; ++i) r.c_[i] = aug[i][n];
  return r;
}

std::string CyclotomicElem::to_string() const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    bool neg = c_[k] < 0;
    BigRational mag = neg ? BigRational(-c_[k]) : c_[k];
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::from_int(std::int64_t n, Domain d) {
  switch (d.kind) {
    case DomainKind::Rational:
      return Scalar(BigRational(static_cast<long>(n)));
    case DomainKind::PrimeField:
      return residue(n, d.p);
    case DomainKind::RationalFunction:
      return Scalar(RationalFunction(LaurentZ::constant(BigInt(static_cast<long>(n)))));
    case DomainKind::Cyclotomic: {
      CyclotomicElem c = CyclotomicElem::zeta_power(d.p, 0);
      std::vector<BigRational> cs = c.coeffs();
      cs[0] = BigRational(static_cast<long>(n));
      return Scalar(CyclotomicElem(d.p, std::move(cs)));
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown domain");
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  return Scalar(BigRational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))));
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::q_power(std::int64_t g) {
  return Scalar(RationalFunction(LaurentZ::monomial(BigInt(1), static_cast<int>(g))));
}

Scalar Scalar::zeta_power(std::int64_t g, std::uint32_t p) {
  return Scalar(CyclotomicElem::zeta_power(p, g));
}

Domain Scalar::domain() const {
  switch (value_.index()) {
    case 0:
      return Domain::rational();
    case 1:
      return {DomainKind::PrimeField, std::get<Residue>(value_).p};
    case 2:
      return Domain::rational_function();
    default:
      return {DomainKind::Cyclotomic, std::get<CyclotomicElem>(value_).p()};
  }
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0:
      return std::get<BigRational>(value_) == 0;
    case 1:
      return std::get<Residue>(value_).v == 0;
    case 2:
      return std::get<RationalFunction>(value_).is_zero();
    default:
      return std::get<CyclotomicElem>(value_).is_zero();
  }
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.domain() != b.domain()) {
    fail(ErrorKind::DomainMismatch, "scalar domain mismatch: " + a.domain().name() + " vs " + b.domain().name());
  }
}

}  // namespace

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0:
      return Scalar(BigRational(-std::get<BigRational>(value_)));
    case 1: {
      Residue r = std::get<Residue>(value_);
      return Scalar(Residue{(r.p - r.v) % r.p, r.p});
    }
    case 2:
      return Scalar(-std::get<RationalFunction>(value_));
    default:
      return Scalar(-std::get<CyclotomicElem>(value_));
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  switch (value_.index()) {
    case 0:
      return Scalar(BigRational(1 / std::get<BigRational>(value_)));
    case 1: {
      Residue r = std::get<Residue>(value_);
      detail::ModPRing ring{r.p};
      return Scalar(Residue{ring.inv(r.v), r.p});
    }
    case 2:
      return Scalar(std::get<RationalFunction>(value_).inverse());
    default:
      return Scalar(std::get<CyclotomicElem>(value_).inverse());
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.value_.index()) {
    case 0:
      return Scalar(BigRational(a.as_rational() + b.as_rational()));
    case 1: {
      Residue x = a.as_residue();
      return Scalar(Residue{(x.v + b.as_residue().v) % x.p, x.p});
    }
    case 2:
      return Scalar(a.as_rational_function() + b.as_rational_function());
    default:
      return Scalar(a.as_cyclotomic() + b.as_cyclotomic());
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.value_.index()) {
    case 0:
      return Scalar(BigRational(a.as_rational() * b.as_rational()));
    case 1: {
      Residue x = a.as_residue();
      return Scalar(Residue{(x.v * b.as_residue().v) % x.p, x.p});
    }
    case 2:
      return Scalar(a.as_rational_function() * b.as_rational_function());
    default:
      return Scalar(a.as_cyclotomic() * b.as_cyclotomic());
  }
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0:
      return std::get<BigRational>(value_).get_str();
    case 1:
      return std::to_string(std::get<Residue>(value_).v);
    case 2:
      return std::get<RationalFunction>(value_).to_string();
    default:
      return std::get<CyclotomicElem>(value_).to_string();
  }
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::Add:
      return a + b;
    case ScalarOp::Mul:
      return a * b;
    case ScalarOp::Neg:
      return -a;
    case ScalarOp::Inv:
      return a.inverse();
  }
  fail(ErrorKind::InvalidArgument, "unknown scalar operation");
}

}  // namespace gainarr
