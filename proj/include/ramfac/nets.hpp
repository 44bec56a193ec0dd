#pragma once

// ε-nets in polyhedral spaces and polyhedral approximation of norms.

#include <cstdint>
#include <functional>
#include <vector>

#include "ramfac/normgeo.hpp"

namespace ramfac {

/// Greedy maximal separated subset: walks seeds then candidates in order and
/// keeps a point when its distance to every kept point exceeds sep.
/// Seeds are kept unconditionally (the caller guarantees they are separated).
std::vector<RatVec> greedy_separated(const std::vector<RatVec>& seeds, const std::vector<RatVec>& candidates,
                                     const std::function<bool(const RatVec&, const RatVec&)>& farther);

enum class NetMode { BallGreedy, Shell };

struct NetOptions {
  Rational radius = 1;             // ball-greedy only
  std::vector<RatVec> seed;        // must be eps-separated; ball-greedy defaults to {0}
  std::size_t grid_per_unit = 0;   // 0 picks 4/eps (rounded up)
  std::size_t max_candidates = 400000;
};

struct Net {
  std::vector<RatVec> points;
  Rational eps;
  BigInt bound;             // ⌊(1+2r/ε)^k⌋, or ⌊(1+4/ε)^k⌋ in shell mode
  std::size_t candidates = 0;
  Rational grid_step;
  bool separated = false;   // pairwise distance > eps (shell: > eps/2 within a sphere)
  bool dense_on_grid = false;
};

/// Throws DomainError for eps <= 0 and BudgetError past max_candidates.
Net eps_net(const PolyhedralSpace& x, const Rational& eps, NetMode mode, const NetOptions& opts = {});

struct ShellReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
};
/// For random nonzero x in the ball: some y in D with ‖x−y‖ < eps and ‖y‖ < ‖x‖.
ShellReport check_shell_property(const PolyhedralSpace& x, const Net& net, std::size_t samples,
                                 std::uint64_t seed);

/// Points of the sphere ρ·Sph(X) obtained by radially projecting a grid on the
/// cube boundary. Exact for polyhedral X.
std::vector<RatVec> sphere_candidates(const PolyhedralSpace& x, const Rational& rho, std::size_t per_unit);

struct Approximation {
  PolyhedralSpace space;
  Rational delta;
  BigInt bound;          // ⌊((2+3ε)/ε)^k⌋
  bool exact_copy = false;
};
/// Throws DomainError unless 0 < eps < 1.
Approximation polyhedral_approx(const NormInput& x, const Rational& eps);

/// ⌊q^k⌋ exactly.
BigInt floor_pow(const Rational& q, std::size_t k);

}  // namespace ramfac
