#pragma once

// Exact matrices over prime fields F_p: echelon forms, the factor maps tau and
// tau^2, the map Phi from rigid surjections, and Grassmannian enumeration.

#include <cstdint>
#include <optional>
#include <vector>

#include "ramfac/core.hpp"
#include "ramfac/orders.hpp"

namespace ramfac {

bool is_prime(std::uint32_t p);

/// Inverse of a nonzero residue modulo the prime p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix() = default;
  /// Zero matrix. Throws DomainError if p is not prime.
  PrimeFieldMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p (negative values allowed).
  static PrimeFieldMatrix from_rows(std::uint32_t p, const std::vector<std::vector<long>>& rows);
  static PrimeFieldMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, long v);
  const std::vector<std::uint32_t>& entries() const noexcept { return e_; }
  std::vector<std::uint32_t> row(std::size_t i) const;
  std::vector<std::uint32_t> col(std::size_t j) const;

  PrimeFieldMatrix transpose() const;
  std::size_t rank() const;

  friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
  bool operator==(const PrimeFieldMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  /// Row-major lexicographic order on entries after (p, rows, cols).
  bool operator<(const PrimeFieldMatrix& o) const;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> e_;
  mutable std::optional<std::size_t> rank_;
};

/// Matrix-vector product over F_p.
std::vector<std::uint32_t> mat_vec(const PrimeFieldMatrix& a, const std::vector<std::uint32_t>& v);

class GLElement {
 public:
  /// Throws RankError if m is not square and invertible.
  explicit GLElement(PrimeFieldMatrix m);
  const PrimeFieldMatrix& matrix() const noexcept { return m_; }
  const PrimeFieldMatrix& inverse() const noexcept { return inv_; }
  bool operator==(const GLElement& o) const { return m_ == o.m_; }

 private:
  PrimeFieldMatrix m_;
  PrimeFieldMatrix inv_;
};

struct RrefResult {
  PrimeFieldMatrix form;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref_with_pivots(const PrimeFieldMatrix& a);
PrimeFieldMatrix rref(const PrimeFieldMatrix& a);
bool is_rref(const PrimeFieldMatrix& a);
/// Reduced column echelon form: the transpose is in RREF.
bool is_rcef(const PrimeFieldMatrix& a);

struct RcefDecomposition {
  PrimeFieldMatrix red;
  GLElement tau;
};

/// For A of full column rank k: red = A·tau in RCEF, tau in GL_k unique.
RcefDecomposition rcef_decompose(const PrimeFieldMatrix& a);

struct Tau2Decomposition {
  GLElement gamma;
  PrimeFieldMatrix a0;  // RCEF basis of the column space
  PrimeFieldMatrix a1;  // RCEF basis of the row space
};

/// For square A of rank k >= 1: A = a0 · gamma · a1^t.
Tau2Decomposition tau2(const PrimeFieldMatrix& a);

/// Rows of the result are the labels f(j); the codomain must be all of F_p^k
/// in antilex order.
PrimeFieldMatrix phi(const RigidSurjection& f, const LinearOrder& codomain);

struct Characterization {
  bool is_rref = false;
  bool rigid_with_units = false;
};

/// Both sides of the RREF characterization for a k×n matrix of rank k.
/// Throws BudgetError when p^n exceeds max_domain.
Characterization rref_characterization(const PrimeFieldMatrix& a,
                                       std::uint64_t max_domain = 4096);

/// One RCEF n×k representative per k-dimensional subspace of F_p^n, sorted.
std::vector<PrimeFieldMatrix> enumerate_grassmannian(std::uint32_t p, std::size_t k, std::size_t n,
                                                     std::uint64_t max_count = 2'000'000);

/// All n×k matrices of rank k (M^k_{n,k}), in entry-lex order.
std::vector<PrimeFieldMatrix> enumerate_full_rank(std::uint32_t p, std::size_t n, std::size_t k,
                                                  std::uint64_t max_count = 2'000'000);

/// prod_{i<k} (p^k - p^i).
BigInt gl_order(std::uint32_t p, std::size_t k);

/// Number of k-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(std::uint32_t p, std::size_t n, std::size_t k);

}  // namespace ramfac
