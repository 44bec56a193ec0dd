#pragma once

// Finite linear orders, rigid surjections, the antilexicographic order on
// F_p^k, and the FIN_k tetris combinatorics.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ramfac/core.hpp"

namespace ramfac {

using FieldVector = std::vector<std::uint32_t>;

/// Antilexicographic comparison of two vectors over F_p: the highest index
/// decides first, field elements compare as residues 0 < 1 < ... < p-1.
std::strong_ordering compare_antilex(std::span<const std::uint32_t> x,
                                     std::span<const std::uint32_t> y);

/// Position of x in the antilex enumeration of F_p^len (sum of x_i p^i).
std::uint64_t antilex_rank(std::span<const std::uint32_t> x, std::uint32_t p);

/// Inverse of antilex_rank.
FieldVector antilex_unrank(std::uint64_t rank, std::uint32_t p, std::size_t len);

/// The natural order on {0..n-1}, optionally carrying labels (for F_p^k the
/// labels are the vectors themselves, in antilex order).
class LinearOrder {
 public:
  explicit LinearOrder(std::size_t size);

  /// All of F_p^k in antilexicographic order; labels are materialized.
  static LinearOrder field_vectors(std::uint32_t p, std::size_t k);

  std::size_t size() const noexcept { return size_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const FieldVector& label(std::size_t i) const { return labels_.at(i); }
  std::uint32_t field() const noexcept { return p_; }
  std::size_t label_length() const noexcept { return k_; }

  bool operator==(const LinearOrder&) const = default;

 private:
  std::size_t size_ = 0;
  std::uint32_t p_ = 0;
  std::size_t k_ = 0;
  std::vector<FieldVector> labels_;
};

/// True iff `map` hits every value in 0..k-1 and the minimum of each fiber
/// increases with the fiber's value. Entries >= k make the answer false.
bool is_rigid_surjection(std::span<const std::uint32_t> map, std::size_t k);

class RigidSurjection {
 public:
  /// Validates the map; throws DomainError if it is not rigid onto k.
  RigidSurjection(std::vector<std::uint32_t> map, std::size_t k);

  static RigidSurjection identity(std::size_t n);

  std::size_t domain_size() const noexcept { return map_.size(); }
  std::size_t codomain_size() const noexcept { return k_; }
  std::uint32_t operator()(std::size_t i) const { return map_[i]; }
  const std::vector<std::uint32_t>& map() const noexcept { return map_; }

  auto operator<=>(const RigidSurjection&) const = default;

 private:
  std::vector<std::uint32_t> map_;
  std::size_t k_;
};

/// Epi(n, k), complete and duplicate-free, lexicographic on the map array.
/// Empty when n < k.
std::vector<RigidSurjection> enumerate_epi(std::size_t n, std::size_t k);
std::vector<RigidSurjection> enumerate_epi(std::size_t n, const LinearOrder& codomain);

/// f∘g for g: n -> m and f: m -> k.
RigidSurjection compose_epi(const RigidSurjection& g, const RigidSurjection& f);

/// A map n -> {0..k} attaining k. Height-0 maps (the all-zero map) are
/// representable but report `degenerate()`.
class FinMap {
 public:
  FinMap(std::size_t k, std::vector<std::uint32_t> values);

  std::size_t height() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<std::uint32_t>& values() const noexcept { return values_; }
  std::uint32_t operator[](std::size_t i) const { return values_[i]; }
  bool degenerate() const noexcept { return k_ == 0; }

  /// Indices with a nonzero value.
  std::vector<std::size_t> support() const;

  auto operator<=>(const FinMap&) const = default;

 private:
  std::size_t k_;
  std::vector<std::uint32_t> values_;
};

/// Pointwise max(f(i) - 1, 0). Throws InvalidHeightError for height 0.
FinMap tetris(const FinMap& f);

/// FIN_k(n) in lexicographic order.
std::vector<FinMap> enumerate_fin(std::size_t k, std::size_t n);

/// The combinatorial space spanned by disjointly supported blocks of height
/// k: one element sum_i T^{k-j_i}(f_i) for each (j_i) in FIN_k(l).
std::vector<FinMap> combinatorial_space(std::span<const FinMap> blocks, std::size_t k);

}  // namespace ramfac
