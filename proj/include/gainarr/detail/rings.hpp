#pragma once

// Integral models of the scalar domains, used by the fraction-free kernels
// (rank, flat enumeration). A ring supplies zero/add/sub/mul, optionally an
// exact division, and `normalize` which rescales a vector by a unit or a
// common divisor without changing the subspace it spans.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "gainarr/bigint.hpp"
#include "gainarr/checked_int.hpp"
#include "gainarr/laurent.hpp"

namespace gainarr::detail {

inline Checked64 to_checked(const BigInt& v) {
  if (!v.fits_slong_p()) fail(ErrorKind::Overflow, "coefficient does not fit in 64 bits");
  return Checked64(v.get_si());
}
inline BigInt to_big(const BigInt& v) { return v; }

template <class C>
C convert_int(const BigInt& v) {
  if constexpr (std::is_same_v<C, BigInt>) {
    return v;
  } else {
    return to_checked(v);
  }
}

template <class C>
struct IntRing {
  using Elem = C;
  static constexpr bool has_divexact = true;

  Elem zero() const { return C(0); }
  Elem one() const { return C(1); }
  bool is_zero(const Elem& a) const { return a == C(0); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
  void normalize(std::span<Elem> v) const {
    C g(0);
    for (const Elem& e : v) {
      g = gcd(g, e);
      if (g == C(1)) return;
    }
    if (g == C(0)) return;
    for (Elem& e : v) e = e / g;
  }
};

struct ModPRing {
  using Elem = std::uint64_t;
  static constexpr bool has_divexact = true;
  std::uint64_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem inv(Elem a) const {
    // Fermat; p < 2^31 keeps products in 64 bits.
    Elem r = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  }
  Elem divexact(Elem a, Elem b) const { return mul(a, inv(b)); }
  void normalize(std::span<Elem> v) const {
    for (Elem e : v) {
      if (e != 0) {
        Elem s = inv(e);
        for (Elem& x : v) x = mul(x, s);
        return;
      }
    }
  }
};

template <class C>
struct LaurentRing {
  using Elem = LaurentPoly<C>;
  static constexpr bool has_divexact = true;

  Elem zero() const { return {}; }
  Elem one() const { return Elem::constant(C(1)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem divexact(const Elem& a, const Elem& b) const { return gainarr::laurent_divexact(a, b); }
  // Removes the common integer content and the common power of q.
  void normalize(std::span<Elem> v) const {
    C g(0);
    int low = 0;
    bool any = false;
    for (const Elem& e : v) {
      if (e.is_zero()) continue;
      low = any ? std::min(low, e.low()) : e.low();
      any = true;
      if (g != C(1)) g = gcd(g, e.content());
    }
    if (!any) return;
    for (Elem& e : v) {
      if (e.is_zero()) continue;
      if (g != C(1)) e = e.divexact_scalar(g);
      if (low != 0) e = e.shifted(-low);
    }
  }
};

/// Laurent polynomial with at most 16 int64 coefficients stored inline.
/// Any overflow, of a coefficient or of the capacity, raises
/// ErrorKind::Overflow so callers can retry with LaurentRing<BigInt>.
struct SmallLaurent {
  static constexpr int kCap = 16;
  int low = 0;
  int len = 0;  // 0 for the zero polynomial; otherwise c[0] and c[len-1] nonzero
  std::array<std::int64_t, kCap> c;  // entries past len are unspecified
};

struct SmallLaurentRing {
  using Elem = SmallLaurent;
  static constexpr bool has_divexact = false;

  [[noreturn]] static void overflow() { fail(ErrorKind::Overflow, "small Laurent overflow"); }

  static SmallLaurent from(const LaurentZ& v) {
    SmallLaurent r;
    if (v.is_zero()) return r;
    if (v.coeffs().size() > SmallLaurent::kCap) overflow();
    r.low = v.low();
    r.len = static_cast<int>(v.coeffs().size());
    for (int k = 0; k < r.len; ++k) r.c[k] = to_checked(v.coeffs()[k]).value();
    return r;
  }

  Elem zero() const { return {}; }
  Elem one() const {
    SmallLaurent r;
    r.len = 1;
    r.c[0] = 1;
    return r;
  }
  bool is_zero(const Elem& a) const { return a.len == 0; }

  static void trim(SmallLaurent& r) {
    int lead = 0;
    while (lead < r.len && r.c[lead] == 0) ++lead;
    if (lead == r.len) {
      r.len = 0;
      r.low = 0;
      return;
    }
    if (lead > 0) {
      for (int k = lead; k < r.len; ++k) r.c[k - lead] = r.c[k];
      r.len -= lead;
      r.low += lead;
    }
    while (r.c[r.len - 1] == 0) --r.len;
  }

  static Elem combine(const Elem& a, const Elem& b, bool subtract) {
    if (b.len == 0) return a;
    if (a.len == 0) {
      if (!subtract) return b;
      Elem r = b;
      for (int k = 0; k < r.len; ++k) {
        if (__builtin_sub_overflow(std::int64_t{0}, r.c[k], &r.c[k])) overflow();
      }
      return r;
    }
    const int low = std::min(a.low, b.low);
    const int high = std::max(a.low + a.len, b.low + b.len);
    if (high - low > SmallLaurent::kCap) overflow();
    SmallLaurent r;
    r.low = low;
    r.len = high - low;
    std::fill(r.c.begin(), r.c.begin() + r.len, 0);
    for (int k = 0; k < a.len; ++k) r.c[a.low - low + k] = a.c[k];
    for (int k = 0; k < b.len; ++k) {
      std::int64_t& t = r.c[b.low - low + k];
      bool o = subtract ? __builtin_sub_overflow(t, b.c[k], &t) : __builtin_add_overflow(t, b.c[k], &t);
      if (o) overflow();
    }
    trim(r);
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const { return combine(a, b, false); }
  Elem sub(const Elem& a, const Elem& b) const { return combine(a, b, true); }
  Elem mul(const Elem& a, const Elem& b) const {
    if (a.len == 0 || b.len == 0) return {};
    if (a.len + b.len - 1 > SmallLaurent::kCap) overflow();
    SmallLaurent r;
    r.low = a.low + b.low;
    r.len = a.len + b.len - 1;
    std::fill(r.c.begin(), r.c.begin() + r.len, 0);
    for (int i = 0; i < a.len; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < b.len; ++j) {
        std::int64_t p;
        if (__builtin_mul_overflow(a.c[i], b.c[j], &p) || __builtin_add_overflow(r.c[i + j], p, &r.c[i + j])) {
          overflow();
        }
      }
    }
    trim(r);
    return r;
  }
  // Removes the common integer content and the common power of q.
  void normalize(std::span<Elem> v) const {
    std::int64_t g = 0;
    int low = 0;
    bool any = false;
    for (const Elem& e : v) {
      if (e.len == 0) continue;
      low = any ? std::min(low, e.low) : e.low;
      any = true;
      for (int k = 0; k < e.len && g != 1; ++k) g = std::gcd(g, e.c[k] < 0 ? -e.c[k] : e.c[k]);
    }
    if (!any) return;
    for (Elem& e : v) {
      if (e.len == 0) continue;
      if (g > 1) {
        for (int k = 0; k < e.len; ++k) e.c[k] /= g;
      }
      e.low -= low;
    }
  }
};

/// Z[zeta_p] in the power basis 1..x^{p-2}; no exact division, so it is only
/// used by kernels that need ring operations alone.
template <class C>
struct CycloRing {
  using Elem = std::vector<C>;
  static constexpr bool has_divexact = false;
  std::uint32_t p;

  Elem zero() const { return Elem(p - 1, C(0)); }
  Elem one() const {
    Elem r(p - 1, C(0));
    r[0] = C(1);
    return r;
  }
  bool is_zero(const Elem& a) const {
    for (const C& c : a) {
      if (c != C(0)) return false;
    }
    return true;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<C> full(p, C(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.size(); ++j) full[(i + j) % p] += a[i] * b[j];
    }
    Elem r(p - 1, C(0));
    for (std::size_t i = 0; i + 1 < p; ++i) r[i] = full[i] - full[p - 1];
    return r;
  }
  void normalize(std::span<Elem> v) const {
    C g(0);
    for (const Elem& e : v) {
      for (const C& c : e) g = gcd(g, c);
    }
    if (g == C(0) || g == C(1)) return;
    for (Elem& e : v) {
      for (C& c : e) c = c / g;
    }
  }
};

/// Rank by fraction-free (Bareiss) elimination with column skipping; every
/// intermediate entry is a minor of the input, so divisions are exact.
template <class Ring>
std::size_t bareiss_rank(const Ring& ring, std::vector<std::vector<typename Ring::Elem>> m) {
  static_assert(Ring::has_divexact);
  if (m.empty()) return 0;
  const std::size_t nrows = m.size();
  const std::size_t ncols = m[0].size();
  using Elem = typename Ring::Elem;
  Elem prev;
  bool have_prev = false;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && ring.is_zero(m[piv][col])) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[rank]);
    const Elem& pv = m[rank][col];
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        Elem v = ring.sub(ring.mul(pv, m[r][c]), ring.mul(m[r][col], m[rank][c]));
        if (have_prev) v = ring.divexact(v, prev);
        m[r][c] = std::move(v);
      }
      m[r][col] = ring.zero();
    }
    prev = m[rank][col];
    have_prev = true;
    ++rank;
  }
  return rank;
}

}  // namespace gainarr::detail
