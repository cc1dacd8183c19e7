#pragma once

// Rescale rows of scalars into the integral model of their domain. Every row
// is multiplied by a nonzero field element, which preserves row spaces and
// hence ranks and kernels.

#include <cstdint>
#include <span>
#include <vector>

#include "gainarr/detail/rings.hpp"
#include "gainarr/scalar.hpp"

namespace gainarr::detail {

using ScalarRows = std::span<const std::vector<Scalar>>;

std::vector<std::vector<BigInt>> integral_rows_rational(ScalarRows rows);
std::vector<std::vector<std::uint64_t>> integral_rows_residue(ScalarRows rows);
std::vector<std::vector<LaurentZ>> integral_rows_laurent(ScalarRows rows);
std::vector<std::vector<std::vector<BigInt>>> integral_rows_cyclotomic(ScalarRows rows);

template <class C>
std::vector<std::vector<C>> convert_rows(const std::vector<std::vector<BigInt>>& rows) {
  std::vector<std::vector<C>> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out[r].reserve(rows[r].size());
    for (const BigInt& v : rows[r]) out[r].push_back(convert_int<C>(v));
  }
  return out;
}

template <class C>
std::vector<std::vector<LaurentPoly<C>>> convert_rows(const std::vector<std::vector<LaurentZ>>& rows) {
  std::vector<std::vector<LaurentPoly<C>>> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out[r].reserve(rows[r].size());
    for (const LaurentZ& v : rows[r]) {
      std::vector<C> cs;
      cs.reserve(v.coeffs().size());
      for (const BigInt& c : v.coeffs()) cs.push_back(convert_int<C>(c));
      out[r].push_back(LaurentPoly<C>::from_coeffs(v.low(), std::move(cs)));
    }
  }
  return out;
}

template <class C>
std::vector<std::vector<std::vector<C>>> convert_rows(
    const std::vector<std::vector<std::vector<BigInt>>>& rows) {
  std::vector<std::vector<std::vector<C>>> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) {
      std::vector<C> cs;
      cs.reserve(e.size());
      for (const BigInt& c : e) cs.push_back(convert_int<C>(c));
      out[r].push_back(std::move(cs));
    }
  }
  return out;
}

inline std::vector<std::vector<SmallLaurent>> small_laurent_rows(const std::vector<std::vector<LaurentZ>>& rows) {
  std::vector<std::vector<SmallLaurent>> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out[r].reserve(rows[r].size());
    for (const LaurentZ& v : rows[r]) out[r].push_back(SmallLaurentRing::from(v));
  }
  return out;
}

/// Runs `fn.template operator()<Checked64>()` and retries with BigInt
/// coefficients if a 64-bit overflow escapes.
template <class Fn>
auto with_overflow_fallback(Fn&& fn) {
  try {
    return fn.template operator()<Checked64>();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
  }
  return fn.template operator()<BigInt>();
}

}  // namespace gainarr::detail
