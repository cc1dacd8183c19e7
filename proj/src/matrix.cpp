#include <algorithm>

#include "gainarr/detail/integral_rows.hpp"
#include "gainarr/error.hpp"
#include "gainarr/scalar.hpp"

namespace gainarr {

namespace detail {

std::vector<std::vector<BigInt>> integral_rows_rational(ScalarRows rows) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt l = 1;
    for (const Scalar& s : row) l = lcm(l, s.as_rational().get_den());
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (const Scalar& s : row) {
      const BigRational& v = s.as_rational();
      r.push_back(v.get_num() * (l / v.get_den()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> integral_rows_residue(ScalarRows rows) {
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::uint64_t> r;
    r.reserve(row.size());
    for (const Scalar& s : row) r.push_back(s.as_residue().v);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<LaurentZ>> integral_rows_laurent(ScalarRows rows) {
  std::vector<std::vector<LaurentZ>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    // Common denominator: lcm of the (primitive-normalized) denominators
    // and of their integer contents.
    LaurentZ l = LaurentZ::constant(1);
    for (const Scalar& s : row) {
      const LaurentZ& d = s.as_rational_function().den();
      if (d.is_one()) continue;
      LaurentZ g = primitive_gcd(l, d);
      BigInt cg = gcd(l.content(), d.content());
      LaurentZ prod = l * d;
      l = divexact(prod, g).divexact_scalar(cg);
    }
    std::vector<LaurentZ> r;
    r.reserve(row.size());
    for (const Scalar& s : row) {
      const RationalFunction& f = s.as_rational_function();
      r.push_back(f.is_polynomial() ? f.num() * l : f.num() * divexact(l, f.den()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<std::vector<BigInt>>> integral_rows_cyclotomic(ScalarRows rows) {
  std::vector<std::vector<std::vector<BigInt>>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt l = 1;
    for (const Scalar& s : row) {
      for (const BigRational& c : s.as_cyclotomic().coeffs()) l = lcm(l, c.get_den());
    }
    std::vector<std::vector<BigInt>> r;
    r.reserve(row.size());
    for (const Scalar& s : row) {
      std::vector<BigInt> e;
      for (const BigRational& c : s.as_cyclotomic().coeffs()) e.push_back(c.get_num() * (l / c.get_den()));
      r.push_back(std::move(e));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

Matrix::Matrix(std::size_t rows, std::size_t cols, Domain domain)
    : rows_(rows), cols_(cols), domain_(domain), data_(rows * cols, Scalar::zero(domain)) {}

Matrix::Matrix(std::vector<std::vector<Scalar>> rows, Domain domain)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), domain_(domain) {
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) fail(ErrorKind::InvalidArgument, "matrix rows must have equal length");
    for (auto& v : row) {
      if (v.domain() != domain_) fail(ErrorKind::DomainMismatch, "matrix entry outside the matrix domain");
      data_.push_back(std::move(v));
    }
  }
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
  if (v.domain() != domain_) fail(ErrorKind::DomainMismatch, "matrix entry outside the matrix domain");
  data_.at(r * cols_ + c) = std::move(v);
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

namespace {

std::vector<std::vector<Scalar>> rows_of(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

std::vector<std::size_t> row_reduce(std::vector<std::vector<Scalar>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    Scalar inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] * inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t matrix_rank_field(const Matrix& m) {
  auto rows = rows_of(m);
  return row_reduce(rows, m.cols()).size();
}

std::size_t matrix_rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto rows = rows_of(m);
  switch (m.domain().kind) {
    case DomainKind::Rational: {
      auto big = detail::integral_rows_rational(rows);
      return detail::with_overflow_fallback([&]<class C>() {
        return detail::bareiss_rank(detail::IntRing<C>{}, detail::convert_rows<C>(big));
      });
    }
    case DomainKind::PrimeField:
      return detail::bareiss_rank(detail::ModPRing{m.domain().p}, detail::integral_rows_residue(rows));
    case DomainKind::RationalFunction: {
      auto big = detail::integral_rows_laurent(rows);
      return detail::with_overflow_fallback([&]<class C>() {
        return detail::bareiss_rank(detail::LaurentRing<C>{}, detail::convert_rows<C>(big));
      });
    }
    case DomainKind::Cyclotomic:
      return matrix_rank_field(m);
  }
  fail(ErrorKind::InvalidArgument, "unknown domain");
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  auto a = rows_of(m);
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.domain());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return Scalar::zero(m.domain());
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Scalar inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Scalar f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  auto a = rows_of(m);
  auto pivots = row_reduce(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.domain()));
    v[free] = Scalar::one(m.domain());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gainarr
