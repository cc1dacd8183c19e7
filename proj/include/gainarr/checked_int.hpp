#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "gainarr/error.hpp"

namespace gainarr {

/// 64-bit integer whose arithmetic throws ErrorKind::Overflow instead of
/// wrapping. Hot kernels run on this first and retry with big integers when
/// an overflow escapes.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(implicit)

  constexpr std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  // Exact quotient; callers guarantee divisibility.
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == 0) fail(ErrorKind::DivisionByZero, "integer division by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) overflow();
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == 0) fail(ErrorKind::DivisionByZero, "integer division by zero");
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const {
    if (v_ == INT64_MIN) overflow();
    return -v_;
  }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }

  friend constexpr bool operator==(Checked64 a, Checked64 b) = default;
  friend constexpr auto operator<=>(Checked64 a, Checked64 b) = default;

  friend Checked64 gcd(Checked64 a, Checked64 b) {
    if (a.v_ == INT64_MIN || b.v_ == INT64_MIN) overflow();
    return std::gcd(a.v_, b.v_);
  }
  friend int sgn(Checked64 a) { return (a.v_ > 0) - (a.v_ < 0); }
  friend Checked64 abs(Checked64 a) { return a.v_ < 0 ? -a : a; }
  friend std::string to_string(Checked64 a) { return std::to_string(a.v_); }

 private:
  [[noreturn]] static void overflow() {
    fail(ErrorKind::Overflow, "64-bit integer overflow");
  }

  std::int64_t v_ = 0;
};

}  // namespace gainarr
