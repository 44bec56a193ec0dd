#pragma once

// Amalgamation of two polyhedral spaces along a near-isometric embedding, and
// correcting pairs built from iterated amalgams.

#include <optional>
#include <string>
#include <vector>

#include "ramfac/normgeo.hpp"

namespace ramfac {

struct Amalgam {
  PolyhedralSpace z;
  RatMatrix i;  // X → Z
  RatMatrix j;  // Y → Z
  Rational t_norm;
  Rational t_inv_norm;
  Rational defect;  // ‖I − J∘T‖
  Rational defect_bound;  // ‖T‖‖T⁻¹‖ − 1
  bool i_isometric = false;
  bool j_isometric = false;
  std::vector<RatVec> d;  // functionals on Y actually used
};

/// T: X → Y injective with ‖T‖, ‖T⁻¹‖ >= 1. Without d, one norm-one extension
/// g of f/‖T⁻¹‖ (Tᵗg = f/‖T⁻¹‖) is chosen per dual extreme point f of X.
/// Throws RankError if T is not injective and DomainError if d is given empty
/// or the norm conditions fail.
Amalgam amalgam(const PolyhedralSpace& x, const PolyhedralSpace& y, const RatMatrix& t,
                const std::optional<std::vector<RatVec>>& d = std::nullopt, bool prune = true);

struct CorrectingOptions {
  std::size_t max_dim = 12;
  std::size_t max_net = 2000;
  std::size_t max_functionals = 4000;
  std::size_t grid_per_unit = 0;  // 0 picks 2/(tau − theta)
};

struct CorrectedEmbedding {
  std::size_t source = 0;  // index i of X_i
  RatMatrix gamma;         // net element X_i → X_n
  RatMatrix i_gamma;       // isometric X_i → Y
  Rational distance;       // ‖J∘γ − I_γ‖
  bool i_isometric = false;
};

struct CorrectingPair {
  PolyhedralSpace y;
  RatMatrix j;  // X_n → Y
  bool j_isometric = false;
  std::vector<std::size_t> net_sizes;    // l_i
  std::vector<CorrectedEmbedding> checks;
  BigInt dim_bound_actual;               // (∏ dim X_i^{l_i})·dim X_n
  std::vector<std::string> log;
};

/// Throws DomainError unless 1 < theta < tau, and BudgetError (message carries
/// the log so far) when a cap is hit.
CorrectingPair correcting_pair(const std::vector<PolyhedralSpace>& spaces, const Rational& theta,
                               const Rational& tau, const CorrectingOptions& opts = {});

/// Operator-norm space L(X, Y) on row-major vec(T).
PolyhedralSpace operator_space(const PolyhedralSpace& x, const PolyhedralSpace& y);

}  // namespace ramfac
