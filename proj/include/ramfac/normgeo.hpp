#pragma once

// Polyhedral normed spaces over the rationals and the metrics between norms.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ramfac/linalg.hpp"

namespace ramfac {

/// ‖x‖ = max over functionals f of |f·x|. Only one of each ± pair is stored.
class PolyhedralSpace {
 public:
  PolyhedralSpace() = default;
  /// Throws DegenerateNormError if the functionals do not span the dual.
  static PolyhedralSpace from_functionals(std::vector<RatVec> functionals, std::size_t dim,
                                          std::string tag = "custom");
  /// Ball = conv(±vertices). Throws DegenerateNormError if they do not span.
  static PolyhedralSpace from_vertices(std::vector<RatVec> vertices, std::size_t dim,
                                       std::string tag = "custom");
  static PolyhedralSpace ell_inf(std::size_t k);
  static PolyhedralSpace ell_1(std::size_t k);

  std::size_t dim() const noexcept { return dim_; }
  const std::string& tag() const noexcept { return tag_; }
  void set_tag(std::string t) { tag_ = std::move(t); }
  const std::vector<RatVec>& functionals() const noexcept { return fs_; }
  /// Symmetric vertex list of the unit ball, computed on first use.
  const std::vector<RatVec>& vertices() const;
  bool has_vertices() const noexcept { return static_cast<bool>(vs_); }
  /// Extreme points of the dual ball, one per ± pair.
  std::vector<RatVec> dual_extreme_points() const;
  /// Same space with redundant functionals removed.
  PolyhedralSpace irredundant() const;

  Rational norm(const RatVec& x) const;
  Rational dual_norm(const RatVec& f) const;
  /// True if the stored vertex list describes the same ball as the functionals.
  bool descriptions_agree() const;

 private:
  std::size_t dim_ = 0;
  std::vector<RatVec> fs_;
  mutable std::shared_ptr<const std::vector<RatVec>> vs_;
  std::string tag_ = "custom";
};

Rational op_norm(const RatMatrix& t, const PolyhedralSpace& x, const PolyhedralSpace& y);
/// min{a : Ball(TX) ⊆ a·T(Ball X)}, or nullopt (infinity) when T = 0.
std::optional<Rational> inv_norm(const RatMatrix& t, const PolyhedralSpace& x,
                                 const PolyhedralSpace& y);

/// A logarithm kept together with its exact rational argument.
struct LogValue {
  Rational arg;
  double value = 0;
};
LogValue make_log(const Rational& arg);

/// log max(‖Id‖_{N,P}, ‖Id‖_{P,N}).
LogValue omega(const PolyhedralSpace& n, const PolyhedralSpace& p);

/// Hausdorff distance in N* between the dual balls of P and Q.
Rational alpha(const PolyhedralSpace& n, const PolyhedralSpace& p, const PolyhedralSpace& q);

struct SandwichCheck {
  Rational lambda;  // least λ with λ⁻¹N ≤ P, Q ≤ λN
  LogValue omega_pq;
  Rational alpha_pq;
  /// α ≤ λ(1 − 1/r) and r ≤ 1 + λα with r = exp ω; these imply the log form.
  bool rational_certificate = false;
  /// λ⁻¹ω ≤ α ≤ λω checked directly with 256-bit floating point (exact when α = 0).
  bool log_form = false;
};
SandwichCheck sandwich_check(const PolyhedralSpace& n, const PolyhedralSpace& p,
                             const PolyhedralSpace& q);

/// Hausdorff distance in Z between the unit balls of span(V) and span(W); the
/// columns of v and w are bases.
Rational gap_metric(const RatMatrix& v, const RatMatrix& w, const PolyhedralSpace& z);

struct BmEstimate {
  Rational kappa;  // ‖Δ‖·‖Δ⁻¹‖ of the best map found
  double log_kappa = 0;
  RatMatrix map;
  std::size_t candidates = 0;
};
/// Upper bound for the Banach-Mazur distance from canonical candidates plus a
/// seeded local search. effort caps the number of candidate evaluations.
BmEstimate bm_upper(const PolyhedralSpace& x, const PolyhedralSpace& y, std::size_t effort = 2000,
                    std::uint64_t seed = 1);

/// x ↦ sqrt(xᵗ G x) for a positive definite rational G. Floating point only.
struct GramNorm {
  RatMatrix gram;
  double norm(const RatVec& x) const;
  double dual_norm(const RatVec& f) const;
  std::size_t dim() const { return gram.rows(); }
};

using NormInput = std::variant<PolyhedralSpace, GramNorm>;

/// ν_p(A)(x) = ‖A x‖_p for p ∈ {1, 2, ∞} (p = 0 encodes ∞).
NormInput pushforward_norm(const RatMatrix& a, int p);

struct Envelope {
  std::size_t d = 0;
  RatMatrix psi;  // d × dim
};
Envelope injective_envelope(const PolyhedralSpace& f);
/// For an isometric T: F → ℓ∞^n, some U: ℓ∞^d → ℓ∞^n with T = U Ψ and U isometric.
std::optional<RatMatrix> factor_through_envelope(const Envelope& env, const PolyhedralSpace& f,
                                                 const RatMatrix& t);

/// Uniform on the grid lo + (hi − lo)·i/den, i = 0..den. Uses the raw engine
/// output so results do not depend on the standard library's distributions.
Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                         std::uint64_t den);

}  // namespace ramfac
