#pragma once

// Boolean partition matrices (embeddings of finite Boolean algebras), the
// ordered subclass M^oba and the column-sorting permutation pi.

#include <cstdint>
#include <vector>

#include "ramfac/core.hpp"
#include "ramfac/orders.hpp"

namespace ramfac {

/// A permutation σ of {0..k-1}, identified with the matrix P having
/// P[σ(j)][j] = 1, so column j of B·P is column σ(j) of B.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> perm);
  static Permutation identity(std::size_t k);

  std::size_t size() const noexcept { return p_.size(); }
  std::uint32_t operator()(std::size_t j) const { return p_[j]; }
  const std::vector<std::uint32_t>& values() const noexcept { return p_; }
  Permutation inverse() const;
  /// (this ∘ other)(j) = this(other(j)).
  Permutation compose(const Permutation& other) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> p_;
};

/// All k! permutations in lexicographic order.
std::vector<Permutation> enumerate_permutations(std::size_t k);

/// n×k 0/1 matrix whose columns partition {0..n-1} into k nonempty blocks.
/// Columns are stored as bitsets, so n <= 64.
class BooleanMatrix {
 public:
  BooleanMatrix(std::size_t n, std::vector<std::uint64_t> columns);
  static BooleanMatrix from_columns(std::size_t n, const std::vector<std::vector<std::size_t>>& cols);
  static BooleanMatrix identity(std::size_t k);

  std::size_t rows() const noexcept { return n_; }
  std::size_t cols() const noexcept { return cols_.size(); }
  std::uint64_t column(std::size_t j) const { return cols_[j]; }
  const std::vector<std::uint64_t>& columns() const noexcept { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return (cols_[j] >> i) & 1u; }
  std::vector<std::size_t> column_members(std::size_t j) const;

  auto operator<=>(const BooleanMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> cols_;
};

BooleanMatrix operator*(const BooleanMatrix& r, const BooleanMatrix& b);
BooleanMatrix operator*(const BooleanMatrix& b, const Permutation& s);

/// Column minima strictly increase.
bool is_oba(const BooleanMatrix& b);

/// The unique permutation with B·pi(B) in M^oba.
Permutation pi(const BooleanMatrix& b);

BooleanMatrix epi_to_boolean(const RigidSurjection& f);
/// Throws DomainError if b is not in M^oba.
RigidSurjection boolean_to_epi(const BooleanMatrix& b);

/// M^ba_{n,k}: one matrix per surjection n -> k, lexicographic on the map
/// i -> (column containing i).
std::vector<BooleanMatrix> enumerate_ba(std::size_t n, std::size_t k);
/// M^oba_{n,k}, in the order of enumerate_epi.
std::vector<BooleanMatrix> enumerate_oba(std::size_t n, std::size_t k);

}  // namespace ramfac
