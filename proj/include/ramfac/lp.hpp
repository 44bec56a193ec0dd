#pragma once

// Exact rational linear programming: dense two-phase simplex with Bland's rule.
// Instances here are tiny (tens of variables), so no attempt at sparsity.

#include <vector>

#include "ramfac/linalg.hpp"

namespace ramfac {

struct LinearProgram {
  std::size_t num_vars = 0;
  RatVec objective;                // maximized
  std::vector<RatVec> le_rows;     // le_rows[i] · x <= le_rhs[i]
  RatVec le_rhs;
  std::vector<RatVec> eq_rows;     // eq_rows[i] · x == eq_rhs[i]
  RatVec eq_rhs;
  std::vector<char> free_var;      // empty means all variables are >= 0

  void add_le(RatVec row, Rational rhs);
  void add_eq(RatVec row, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RatVec x;
};

LpResult solve_lp(const LinearProgram& lp);

}  // namespace ramfac
