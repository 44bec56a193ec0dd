#include "ramfac/lp.hpp"

#include <cstdint>

namespace ramfac {

void LinearProgram::add_le(RatVec row, Rational rhs) {
  if (row.size() != num_vars) throw DimensionError("LP row length differs from num_vars");
  le_rows.push_back(std::move(row));
  le_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_eq(RatVec row, Rational rhs) {
  if (row.size() != num_vars) throw DimensionError("LP row length differs from num_vars");
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

namespace {

struct Tableau {
  std::vector<RatVec> t;  // rows of B^-1 [A | b]
  std::vector<std::size_t> basis;
  RatVec d;               // reduced costs, last entry = -objective value
  std::size_t ncols = 0;  // without rhs

  const Rational& rhs(std::size_t i) const { return t[i][ncols]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    if (d[c] != 0) {
      const Rational f = d[c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (t[r][j] != 0) d[j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  void price(const RatVec& cost) {
    d.assign(ncols + 1, 0);
    for (std::size_t j = 0; j < ncols; ++j) d[j] = cost[j];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols; ++j)
        if (t[i][j] != 0) d[j] -= cb * t[i][j];
    }
  }

  // Minimizes cost over columns with allowed[j]; false if unbounded.
  bool run(const RatVec& cost, const std::vector<char>& allowed) {
    price(cost);
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (allowed[j] && d[j] < 0) {
          enter = j;
          break;
        }
      if (enter == ncols) return true;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = rhs(i) / t[i][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n) throw DimensionError("LP objective length differs from num_vars");
  auto is_free = [&](std::size_t j) { return !lp.free_var.empty() && lp.free_var[j]; };

  // Column layout: structural (free vars split in two), slacks, artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = col++;
    if (is_free(j)) neg_col[j] = col++;
  }
  const std::size_t n_struct = col;
  const std::size_t m_le = lp.le_rows.size(), m = m_le + lp.eq_rows.size();
  const std::size_t n_real = n_struct + m_le;
  Tableau tab;
  tab.ncols = n_real + m;
  tab.t.assign(m, RatVec(tab.ncols + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const RatVec& row = i < m_le ? lp.le_rows[i] : lp.eq_rows[i - m_le];
    Rational b = i < m_le ? lp.le_rhs[i] : lp.eq_rhs[i - m_le];
    const int sign = b < 0 ? -1 : 1;
    auto& r = tab.t[i];
    for (std::size_t j = 0; j < n; ++j) {
      r[pos_col[j]] = sign * row[j];
      if (neg_col[j] != SIZE_MAX) r[neg_col[j]] = -sign * row[j];
    }
    if (i < m_le) r[n_struct + i] = sign;
    r[n_real + i] = 1;
    r[tab.ncols] = sign * b;
    tab.basis[i] = n_real + i;
  }

  RatVec cost1(tab.ncols, 0);
  for (std::size_t i = 0; i < m; ++i) cost1[n_real + i] = 1;
  std::vector<char> all(tab.ncols, 1);
  tab.run(cost1, all);
  if (tab.d[tab.ncols] != 0) return {LpStatus::Infeasible, 0, {}};

  // Drive zero-valued artificials out of the basis; drop rows that are redundant.
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n_real) {
      ++i;
      continue;
    }
    std::size_t c = n_real;
    for (std::size_t j = 0; j < n_real; ++j)
      if (tab.t[i][j] != 0) {
        c = j;
        break;
      }
    if (c < n_real) {
      tab.pivot(i, c);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<long>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
    }
  }

  RatVec cost2(tab.ncols, 0);
  for (std::size_t j = 0; j < n; ++j) {
    cost2[pos_col[j]] = -lp.objective[j];
    if (neg_col[j] != SIZE_MAX) cost2[neg_col[j]] = lp.objective[j];
  }
  std::vector<char> real(tab.ncols, 0);
  for (std::size_t j = 0; j < n_real; ++j) real[j] = 1;
  if (!tab.run(cost2, real)) return {LpStatus::Unbounded, 0, {}};

  RatVec val(tab.ncols, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i) val[tab.basis[i]] = tab.rhs(i);
  LpResult res{LpStatus::Optimal, 0, RatVec(n)};
  for (std::size_t j = 0; j < n; ++j) {
    res.x[j] = val[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) res.x[j] -= val[neg_col[j]];
  }
  res.value = dot(lp.objective, res.x);
  return res;
}

}  // namespace ramfac
