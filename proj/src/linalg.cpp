#include "ramfac/linalg.hpp"

#include <optional>

namespace ramfac {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols_if_empty) {
  const std::size_t c = rows.empty() ? cols_if_empty : rows[0].size();
  RatMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged rational matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_cols(const std::vector<RatVec>& cols, std::size_t rows_if_empty) {
  return from_rows(cols, rows_if_empty).transpose();
}

RatVec RatMatrix::row(std::size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }

RatVec RatMatrix::col(std::size_t j) const {
  RatVec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<RatVec> RatMatrix::row_list() const {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::col_range(std::size_t c0, std::size_t c1) const {
  RatMatrix m(r_, c1 - c0);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = c0; j < c1; ++j) m(i, j - c0) = (*this)(i, j);
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("rational matrix product: inner sizes differ");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shapes differ");
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + Rational(-1) * b; }

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

RatVec operator*(const RatMatrix& a, const RatVec& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: sizes differ");
  RatVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

Rational dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw DimensionError("dot: lengths differ");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
  return s;
}

RatVec operator+(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw DimensionError("vector sum: lengths differ");
  RatVec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

RatVec operator-(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw DimensionError("vector difference: lengths differ");
  RatVec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

RatVec operator*(const Rational& s, const RatVec& x) {
  RatVec z(x);
  for (auto& v : z) v *= s;
  return z;
}

RatVec operator-(const RatVec& x) { return Rational(-1) * x; }

RatVec left_mul(const RatVec& x, const RatMatrix& a) {
  if (a.rows() != x.size()) throw DimensionError("left_mul: sizes differ");
  RatVec y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a(i, j);
  }
  return y;
}

bool is_zero(const RatVec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

RowEchelon rref(const RatMatrix& a) {
  RowEchelon out{a, {}};
  RatMatrix& m = out.form;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }

std::size_t rank(const std::vector<RatVec>& rows, std::size_t dim) {
  return rank(RatMatrix::from_rows(rows, dim));
}

std::vector<std::size_t> independent_rows(const std::vector<RatVec>& rows, std::size_t dim) {
  // Incremental elimination against the basis collected so far.
  std::vector<RatVec> basis;
  std::vector<std::size_t> lead;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows.size() && basis.size() < dim; ++i) {
    RatVec v = rows[i];
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (v[lead[b]] != 0) v = v - v[lead[b]] * basis[b];
    std::size_t l = 0;
    while (l < dim && v[l] == 0) ++l;
    if (l == dim) continue;
    v = (1 / v[l]) * v;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (basis[b][l] != 0) basis[b] = basis[b] - basis[b][l] * v;
    basis.push_back(std::move(v));
    lead.push_back(l);
    out.push_back(i);
  }
  return out;
}

std::vector<RatVec> nullspace(const RatMatrix& a) {
  auto e = rref(a);
  std::vector<char> is_piv(a.cols(), 0);
  for (auto p : e.pivots) is_piv[p] = 1;
  std::vector<RatVec> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    RatVec v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.form(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionError("inverse: matrix is not square");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw RankError("inverse: matrix is singular");
  return e.form.col_range(n, 2 * n);
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length differs");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.form(i, a.cols());
  return x;
}

}  // namespace ramfac
