#pragma once

// Finite pointed metric spaces and their Lipschitz-free spaces.
//
// A FreeVector lists coefficients over the non-basepoint points in increasing
// index order, i.e. coordinates of ∑ a_x (δ_x − δ_p).

#include <cstdint>
#include <vector>

#include "ramfac/normgeo.hpp"

namespace ramfac {

class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  /// Throws DomainError unless d is a metric (exact checks).
  FiniteMetricSpace(std::vector<RatVec> d, std::size_t basepoint = 0);

  std::size_t size() const noexcept { return d_.size(); }
  std::size_t basepoint() const noexcept { return base_; }
  const Rational& d(std::size_t i, std::size_t j) const { return d_[i][j]; }
  const std::vector<RatVec>& matrix() const noexcept { return d_; }
  Rational min_distance() const;
  Rational diameter() const;
  /// Non-basepoint indices in increasing order (the free-space coordinates).
  std::vector<std::size_t> coordinate_points() const;

 private:
  std::vector<RatVec> d_;
  std::size_t base_ = 0;
};

using FreeVector = RatVec;

/// Distance used for the added point: max(min distance, diameter/2).
Rational extension_constant(const FiniteMetricSpace& m);

/// Appends one point at distance c from every point (default
/// extension_constant(m)) and makes it the basepoint. Throws DomainError if
/// m has fewer than two points or c is too small for the triangle inequality.
FiniteMetricSpace one_point_extension(const FiniteMetricSpace& m);
FiniteMetricSpace one_point_extension(const FiniteMetricSpace& m, const Rational& c);

/// f has one value per point and must vanish at the basepoint.
Rational lipschitz_norm(const FiniteMetricSpace& m, const RatVec& f);

struct FreeNormPair {
  Rational primal;  // min ∑|a_xy| d(x,y) over molecule representations
  Rational dual;    // max ∑ v_x f(x) over 1-Lipschitz f with f(p) = 0
};
FreeNormPair free_norm_lps(const FiniteMetricSpace& m, const FreeVector& v);
/// The common optimum of both LPs; throws Error if they ever disagree.
Rational free_norm(const FiniteMetricSpace& m, const FreeVector& v);

/// δ_x − δ_p in free-space coordinates (zero vector for x = p).
FreeVector delta(const FiniteMetricSpace& m, std::size_t x);

/// The molecules (δ_x − δ_y)/d(x,y), x < y.
std::vector<FreeVector> molecules(const FiniteMetricSpace& m);

/// Ball = conv of the extreme molecules. Throws BudgetError above dim 5.
PolyhedralSpace free_space(const FiniteMetricSpace& m);

/// σ: M → N distance preserving (checked, DomainError otherwise).
bool is_isometric_embedding(const FiniteMetricSpace& m, const FiniteMetricSpace& n,
                            const std::vector<std::size_t>& sigma);

struct ExtendedEmbedding {
  FiniteMetricSpace m_inf, n_inf;  // both extended with N's constant
  RatMatrix t;                     // F(M_∞) → F(N_∞)
};
ExtendedEmbedding extend_embedding(const FiniteMetricSpace& m, const FiniteMetricSpace& n,
                                   const std::vector<std::size_t>& sigma);

/// All distance-preserving injections M → N in lexicographic order.
/// Throws BudgetError if N has more than max_target points or the list would
/// exceed max_results.
std::vector<std::vector<std::size_t>> enumerate_emb(const FiniteMetricSpace& m, const FiniteMetricSpace& n,
                                                    std::size_t max_target = 10,
                                                    std::size_t max_results = 1000000);

struct ArpProbe {
  std::size_t grid_points = 0;
  std::size_t embeddings = 0;   // of M into the grid, counted up to the cap
  bool capped = false;
  std::vector<std::size_t> first;  // first embedding found, as grid indices
  std::vector<RatVec> grid;        // only the points used by `first`
};
/// Discretized experiment: isometric copies of M inside the grid
/// (step·Z^dim) ∩ rho·Ball(ℓ∞^dim), with the ℓ∞ metric. Reports counts only.
ArpProbe arp_probe(const FiniteMetricSpace& m, std::size_t dim, const Rational& rho, const Rational& step,
                   std::size_t max_embeddings = 100000);

}  // namespace ramfac
