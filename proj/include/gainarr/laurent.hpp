#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gainarr/bigint.hpp"
#include "gainarr/checked_int.hpp"
#include "gainarr/error.hpp"

namespace gainarr {

/// Laurent polynomial in q with coefficients in an integer type C
/// (BigInt or Checked64). Stored as q^low * (c_0 + c_1 q + ... + c_n q^n)
/// with c_0 and c_n nonzero; the zero polynomial has no coefficients.
template <class C>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(C c, int exponent) {
    LaurentPoly p;
    if (c != C(0)) {
      p.low_ = exponent;
      p.coeffs_.push_back(std::move(c));
    }
    return p;
  }
  static LaurentPoly constant(C c) { return monomial(std::move(c), 0); }

  /// Builds q^low * sum coeffs[k] q^k, normalizing zeros at both ends.
  static LaurentPoly from_coeffs(int low, std::vector<C> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == C(1); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Width of the exponent range; a monomial has span 0.
  int span_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const C> coeffs() const { return coeffs_; }
  const C& leading() const { return coeffs_.back(); }
  const C& trailing() const { return coeffs_.front(); }

  C coeff(int exponent) const {
    int k = exponent - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return C(0);
    return coeffs_[k];
  }

  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  C content() const {
    C g(0);
    for (const C& c : coeffs_) {
      g = gcd(g, c);
      if (g == C(1)) break;
    }
    return g;
  }

  LaurentPoly divexact_scalar(const C& d) const {
    LaurentPoly r = *this;
    for (C& c : r.coeffs_) c = c / d;
    return r;
  }
  LaurentPoly scaled(const C& m) const {
    if (m == C(0)) return {};
    LaurentPoly r = *this;
    for (C& c : r.coeffs_) c = c * m;
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (C& c : r.coeffs_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return add_scaled(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return add_scaled(a, b, true);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    r.trim();
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Exact quotient a / b in Z[q, 1/q]. Throws if b does not divide a.
  friend LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "Laurent polynomial division by zero");
    if (a.is_zero()) return {};
    // Both normalized so their lowest exponent is 0; divide as ordinary
    // polynomials, leading coefficient first.
    std::vector<C> rem(a.coeffs_);
    const std::vector<C>& den = b.coeffs_;
    if (rem.size() < den.size()) fail(ErrorKind::Precondition, "inexact Laurent division");
    std::vector<C> quot(rem.size() - den.size() + 1, C(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
      const C& top = rem[k + den.size() - 1];
      if (top == C(0)) continue;
      if (top % den.back() != C(0)) fail(ErrorKind::Precondition, "inexact Laurent division");
      C f = top / den.back();
      for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= f * den[j];
      quot[k] = std::move(f);
    }
    for (const C& c : rem) {
      if (c != C(0)) fail(ErrorKind::Precondition, "inexact Laurent division");
    }
    return from_coeffs(a.low_ - b.low_, std::move(quot));
  }

  /// Total order used for hashing and canonical sorting.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.low_ != b.low_) return a.low_ < b.low_;
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                        b.coeffs_.end());
  }

  std::string to_string(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const C& c = coeffs_[k];
      if (c == C(0)) continue;
      int e = low_ + static_cast<int>(k);
      bool neg = c < C(0);
      C mag = neg ? C(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit = mag == C(1);
      if (e == 0) {
        out += gainarr::to_string(mag);
        continue;
      }
      if (!unit) out += gainarr::to_string(mag) + "*";
      out += var;
      if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return out;
  }

 private:
  static LaurentPoly add_scaled(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    LaurentPoly r;
    r.low_ = std::min(a.low_, b.low_);
    int hi = std::max(a.high(), b.high());
    r.coeffs_.assign(static_cast<std::size_t>(hi - r.low_ + 1), C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[a.low_ - r.low_ + i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      C& slot = r.coeffs_[b.low_ - r.low_ + i];
      if (subtract) {
        slot -= b.coeffs_[i];
      } else {
        slot += b.coeffs_[i];
      }
    }
    r.trim();
    return r;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == C(0)) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<C> coeffs_;
};

using LaurentZ = LaurentPoly<BigInt>;

template <class C>
LaurentPoly<C> laurent_divexact(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  return divexact(a, b);
}

}  // namespace gainarr
