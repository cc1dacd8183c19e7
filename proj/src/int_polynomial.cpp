#include "gainarr/int_polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "gainarr/bigint.hpp"
#include "gainarr/error.hpp"

namespace gainarr {

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> ascending) {
  for (auto v : ascending) c_.emplace_back(v);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Checked64> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::constant(std::int64_t c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::int64_t c, int degree) {
  std::vector<Checked64> v(static_cast<std::size_t>(degree) + 1, Checked64(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::power_of_linear(std::int64_t r, int k) {
  IntPolynomial out = constant(1);
  IntPolynomial lin({-r, 1});
  for (int i = 0; i < k; ++i) out = out * lin;
  return out;
}

IntPolynomial IntPolynomial::from_roots(const std::vector<std::int64_t>& roots) {
  IntPolynomial out = constant(1);
  for (auto r : roots) out = out * IntPolynomial({-r, 1});
  return out;
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == Checked64(0)) c_.pop_back();
}

std::int64_t IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k].value();
}

std::vector<std::int64_t> IntPolynomial::coefficients() const {
  std::vector<std::int64_t> out;
  out.reserve(c_.size());
  for (auto c : c_) out.push_back(c.value());
  return out;
}

std::int64_t IntPolynomial::evaluate(std::int64_t t) const {
  Checked64 acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * Checked64(t) + c_[k];
  return acc.value();
}

IntPolynomial IntPolynomial::shifted(std::int64_t s) const {
  // Horner in the polynomial ring: p(t+s) = (...(c_n (t+s) + c_{n-1})(t+s) ...)
  IntPolynomial lin({s, 1});
  IntPolynomial acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * lin + constant(c_[k].value());
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Checked64> r(std::max(a.c_.size(), b.c_.size()), Checked64(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Checked64> r(a.c_.size() + b.c_.size() - 1, Checked64(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(r));
}

namespace {

// Long division over Q. Returns (quotient, remainder).
std::pair<std::vector<BigRational>, std::vector<BigRational>> divide_q(const std::vector<std::int64_t>& num,
                                                                      const std::vector<std::int64_t>& den) {
  std::vector<BigRational> rem(num.begin(), num.end());
  for (auto& r : rem) r = BigRational(static_cast<long>(r.get_num().get_si()));
  if (num.size() < den.size()) return {{}, rem};
  std::vector<BigRational> quot(num.size() - den.size() + 1, BigRational(0));
  BigRational lead(static_cast<long>(den.back()));
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRational f = rem[k + den.size() - 1] / lead;
    if (f == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= f * BigRational(static_cast<long>(den[j]));
    quot[k] = f;
  }
  rem.resize(den.size() - 1);
  return {quot, rem};
}

}  // namespace

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return IntPolynomial();
  auto [quot, rem] = divide_q(coefficients(), divisor.coefficients());
  if (quot.empty()) return std::nullopt;
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  std::vector<Checked64> q;
  for (const auto& v : quot) {
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    q.emplace_back(v.get_num().get_si());
  }
  return IntPolynomial(std::move(q));
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return true;
  auto [quot, rem] = divide_q(coefficients(), divisor.coefficients());
  if (quot.empty()) return false;
  return std::all_of(rem.begin(), rem.end(), [](const BigRational& r) { return r == 0; });
}

std::vector<std::int64_t> IntPolynomial::integer_roots(IntPolynomial* rest) const {
  if (is_zero()) fail(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::vector<std::int64_t> roots;
  IntPolynomial p = *this;
  // Factor out t^k.
  while (p.degree() > 0 && p.c_[0] == Checked64(0)) {
    roots.push_back(0);
    p.c_.erase(p.c_.begin());
  }
  bool found = true;
  while (found && p.degree() > 0) {
    found = false;
    std::int64_t c0 = std::llabs(p.c_[0].value());
    // Any integer root divides the constant term.
    for (std::int64_t d = 1; d * d <= c0 && !found; ++d) {
      if (c0 % d != 0) continue;
      for (std::int64_t cand : {d, -d, c0 / d, -(c0 / d)}) {
        if (p.evaluate(cand) == 0) {
          roots.push_back(cand);
          p = *p.divide_exact(IntPolynomial({-cand, 1}));
          found = true;
          break;
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  if (rest) *rest = p;
  return roots;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    std::int64_t c = c_[k].value();
    if (c == 0) continue;
    bool neg = c < 0;
    std::int64_t mag = neg ? -c : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string IntPolynomial::to_factored_string() const {
  if (is_zero() || degree() == 0) return to_string();
  IntPolynomial rest;
  auto roots = integer_roots(&rest);
  std::map<std::int64_t, int> mult;
  for (auto r : roots) ++mult[r];
  std::string out;
  std::int64_t lead = rest.degree() == 0 ? rest.coeff(0) : 1;
  if (lead == -1) {
    out = "-";
  } else if (lead != 1) {
    out = std::to_string(lead) + "*";
  }
  bool first = true;
  for (auto [r, k] : mult) {
    if (!first) out += "*";
    first = false;
    std::string f = r == 0 ? "t" : (r > 0 ? "(t - " + std::to_string(r) + ")" : "(t + " + std::to_string(-r) + ")");
    out += f;
    if (k > 1) out += "^" + std::to_string(k);
  }
  if (rest.degree() > 0) {
    if (!first) out += "*";
    out += "(" + rest.to_string() + ")";
  }
  if (first && rest.degree() <= 0) out += "1";
  return out;
}

}  // namespace gainarr
