#pragma once

// Dense exact linear algebra over the rationals.

#include <optional>
#include <vector>

#include "ramfac/core.hpp"

namespace ramfac {

using RatVec = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols_if_empty = 0);
  static RatMatrix from_cols(const std::vector<RatVec>& cols, std::size_t rows_if_empty = 0);

  std::size_t rows() const noexcept { return r_; }
  std::size_t cols() const noexcept { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;
  std::vector<RatVec> row_list() const;
  RatMatrix transpose() const;
  /// Columns [c0, c1).
  RatMatrix col_range(std::size_t c0, std::size_t c1) const;

  bool operator==(const RatMatrix& o) const = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);
RatVec operator*(const RatMatrix& a, const RatVec& x);

Rational dot(const RatVec& x, const RatVec& y);
RatVec operator+(const RatVec& x, const RatVec& y);
RatVec operator-(const RatVec& x, const RatVec& y);
RatVec operator*(const Rational& s, const RatVec& x);
RatVec operator-(const RatVec& x);
/// x^t A, i.e. A^t x.
RatVec left_mul(const RatVec& x, const RatMatrix& a);
bool is_zero(const RatVec& x);

struct RowEchelon {
  RatMatrix form;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot columns
};

RowEchelon rref(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
std::size_t rank(const std::vector<RatVec>& rows, std::size_t dim);
/// Indices of a maximal linearly independent subset of rows, greedily from the front.
std::vector<std::size_t> independent_rows(const std::vector<RatVec>& rows, std::size_t dim);
/// Basis of {x : A x = 0}, as columns.
std::vector<RatVec> nullspace(const RatMatrix& a);
/// Throws RankError if singular.
RatMatrix inverse(const RatMatrix& a);
/// Some solution of A x = b, or nullopt.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

}  // namespace ramfac
