#include "ramfac/amalgam.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ramfac/lp.hpp"
#include "ramfac/nets.hpp"
#include "ramfac/polytope.hpp"

namespace ramfac {

namespace {

// Some g in conv(±H(Y)) with Tᵗg = target, or nullopt.
std::optional<RatVec> extend_functional(const PolyhedralSpace& y, const RatMatrix& t, const RatVec& target) {
  const auto& hs = y.functionals();
  const std::size_t m = hs.size(), dy = y.dim();
  LinearProgram lp;
  lp.num_vars = 2 * m;
  lp.objective.assign(2 * m, 0);
  lp.add_le(RatVec(2 * m, 1), 1);
  for (std::size_t c = 0; c < t.cols(); ++c) {
    RatVec row(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
      Rational s = 0;
      for (std::size_t r = 0; r < dy; ++r) s += t(r, c) * hs[j][r];
      row[j] = s;
      row[m + j] = -s;
    }
    lp.add_eq(std::move(row), target[c]);
  }
  const auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  RatVec g(dy);
  for (std::size_t j = 0; j < m; ++j) g = g + (res.x[j] - res.x[m + j]) * hs[j];
  return g;
}

}  // namespace

Amalgam amalgam(const PolyhedralSpace& x, const PolyhedralSpace& y, const RatMatrix& t,
                const std::optional<std::vector<RatVec>>& d, bool prune) {
  const std::size_t dx = x.dim(), dy = y.dim();
  if (t.rows() != dy || t.cols() != dx) throw DimensionError("amalgam: T has the wrong shape");
  if (rank(t) != dx) throw RankError("amalgam: T is not injective");
  Amalgam out;
  out.t_norm = op_norm(t, x, y);
  out.t_inv_norm = *inv_norm(t, x, y);
  if (out.t_norm < 1 || out.t_inv_norm < 1) throw DomainError("amalgam: need ‖T‖ >= 1 and ‖T⁻¹‖ >= 1");
  out.defect_bound = out.t_norm * out.t_inv_norm - 1;

  if (d) {
    if (d->empty()) throw DomainError("amalgam: D is empty");
    for (const auto& g : *d) {
      if (g.size() != dy) throw DimensionError("amalgam: functional in D has the wrong length");
      if (y.dual_norm(g) > 1) throw DomainError("amalgam: functional in D lies outside Ball(Y*)");
      if (is_zero(left_mul(g, t))) throw DomainError("amalgam: functional in D vanishes on T(X)");
    }
    out.d = *d;
  } else {
    for (const auto& f : x.dual_extreme_points()) {
      auto g = extend_functional(y, t, (1 / out.t_inv_norm) * f);
      if (!g) throw Error("internal: norm-one extension not found");
      out.d.push_back(std::move(*g));
    }
  }

  // Functionals of the seminorm Q on X ⊕ Y.
  std::vector<RatVec> rows;
  auto push = [&](const RatVec& a, const RatVec& b) {
    RatVec r(a);
    r.insert(r.end(), b.begin(), b.end());
    rows.push_back(std::move(r));
  };
  for (const auto& h : y.functionals()) push((1 / out.t_norm) * left_mul(h, t), h);
  for (const auto& g : out.d) {
    const RatVec tg = left_mul(g, t);
    push((1 / x.dual_norm(tg)) * tg, (1 / out.t_norm) * g);
  }

  // Quotient by ker Q: coordinates z = P w for a maximal independent row set P.
  const std::size_t n = dx + dy;
  const auto basis_idx = independent_rows(rows, n);
  const std::size_t rho = basis_idx.size();
  RatMatrix p(rho, n);
  for (std::size_t a = 0; a < rho; ++a)
    for (std::size_t b = 0; b < n; ++b) p(a, b) = rows[basis_idx[a]][b];
  const auto cols = rref(p).pivots;
  RatMatrix ps(rho, rho);
  for (std::size_t a = 0; a < rho; ++a)
    for (std::size_t b = 0; b < rho; ++b) ps(a, b) = p(a, cols[b]);
  const RatMatrix ps_inv = inverse(ps);
  std::vector<RatVec> zf;
  for (const auto& r : rows) {
    RatVec rs(rho);
    for (std::size_t b = 0; b < rho; ++b) rs[b] = r[cols[b]];
    zf.push_back(left_mul(rs, ps_inv));
  }
  out.z = PolyhedralSpace::from_functionals(std::move(zf), rho, "amalgam");
  if (prune) out.z = out.z.irredundant();
  out.i = p.col_range(0, dx);
  out.j = p.col_range(dx, n);

  out.i_isometric = op_norm(out.i, x, out.z) == 1 && inv_norm(out.i, x, out.z) == Rational(1);
  out.j_isometric = op_norm(out.j, y, out.z) == 1 && inv_norm(out.j, y, out.z) == Rational(1);
  out.defect = op_norm(out.i - out.j * t, x, out.z);
  return out;
}

PolyhedralSpace operator_space(const PolyhedralSpace& x, const PolyhedralSpace& y) {
  const std::size_t dx = x.dim(), dy = y.dim();
  std::vector<RatVec> fs;
  for (const auto& h : y.functionals())
    for (const auto& v : symmetric_representatives(x.vertices())) {
      RatVec f(dx * dy);
      for (std::size_t r = 0; r < dy; ++r)
        for (std::size_t c = 0; c < dx; ++c) f[r * dx + c] = h[r] * v[c];
      fs.push_back(std::move(f));
    }
  return PolyhedralSpace::from_functionals(std::move(fs), dx * dy, "operators");
}

namespace {

RatMatrix unvec(const RatVec& v, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

std::string join(const std::vector<std::string>& log) {
  std::string s;
  for (const auto& l : log) s += "\n  " + l;
  return s;
}

// A (tau − theta)-separated net of Eemb_θ(X, Y) in the operator norm, built
// greedily over grid matrices and their normalizations.
std::vector<RatMatrix> embedding_net(const PolyhedralSpace& x, const PolyhedralSpace& y, const Rational& theta,
                                     const Rational& mesh, std::size_t per_unit, std::size_t max_net) {
  const std::size_t dx = x.dim(), dy = y.dim(), k = dx * dy;
  // Entries of T with ‖T‖ <= θ are bounded by θ·max‖e_r‖_{Y*}·max‖e_c‖_X.
  Rational ey = 0, ex = 0;
  for (std::size_t r = 0; r < dy; ++r) {
    RatVec e(dy);
    e[r] = 1;
    ey = std::max(ey, y.dual_norm(e));
  }
  for (std::size_t c = 0; c < dx; ++c) {
    RatVec e(dx);
    e[c] = 1;
    ex = std::max(ex, x.norm(e));
  }
  const Rational bq = theta * ey * ex * static_cast<long>(per_unit);
  const long half = (numerator(bq) / denominator(bq)).convert_to<long>() + 1;
  if (std::pow(2.0 * static_cast<double>(half) + 1, static_cast<double>(k)) > 2e5)
    throw BudgetError("correcting_pair: operator grid too large");

  std::vector<RatVec> cands;
  std::vector<long> idx(k, -half);
  for (;;) {
    RatVec v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = Rational(idx[i], static_cast<long>(per_unit));
    const RatMatrix t = unvec(v, dy, dx);
    if (!is_zero(v) && rank(t) == dx) {
      const Rational n1 = op_norm(t, x, y);
      const Rational n2 = *inv_norm(t, x, y);
      if (n1 * n2 <= theta) {
        if (n1 >= 1 && n2 >= 1) cands.push_back(v);
        cands.push_back((1 / n1) * v);
      }
    }
    std::size_t i = 0;
    while (i < k && idx[i] == half) idx[i++] = -half;
    if (i == k) break;
    ++idx[i];
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  const auto ops = operator_space(x, y);
  const auto net = greedy_separated({}, cands, [&](const RatVec& a, const RatVec& b) { return ops.norm(a - b) > mesh; });
  if (net.size() > max_net) throw BudgetError("correcting_pair: net exceeds max_net");
  std::vector<RatMatrix> out;
  for (const auto& v : net) out.push_back(unvec(v, dy, dx));
  return out;
}

}  // namespace

CorrectingPair correcting_pair(const std::vector<PolyhedralSpace>& spaces, const Rational& theta,
                               const Rational& tau, const CorrectingOptions& opts) {
  if (spaces.size() < 2) throw DomainError("correcting_pair: need at least two spaces");
  if (!(1 < theta && theta < tau)) throw DomainError("correcting_pair: need 1 < theta < tau");
  const std::size_t n = spaces.size() - 1;
  const Rational mesh = tau - theta;
  std::size_t per_unit = opts.grid_per_unit;
  if (per_unit == 0) {
    const Rational q = 2 / mesh;
    per_unit = (numerator(q) / denominator(q)).convert_to<std::size_t>() + 1;
  }

  CorrectingPair out;
  out.y = spaces[n];
  out.j = RatMatrix::identity(spaces[n].dim());
  out.net_sizes.assign(n, 0);
  auto budget = [&](const std::string& why) { throw BudgetError("correcting_pair: " + why + join(out.log)); };

  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    std::vector<RatMatrix> net;
    try {
      net = embedding_net(spaces[i], spaces[n], theta, mesh, per_unit, opts.max_net);
    } catch (const BudgetError& e) {
      budget(e.what());
    }
    out.net_sizes[i] = net.size();
    out.log.push_back("X_" + std::to_string(i) + ": net of " + std::to_string(net.size()) + " embeddings");
    for (const auto& gamma : net) {
      const Amalgam a = amalgam(spaces[i], out.y, out.j * gamma);
      out.j = a.j * out.j;
      for (auto& c : out.checks) c.i_gamma = a.j * c.i_gamma;
      out.checks.push_back({i, gamma, a.i, 0, false});
      out.y = a.z;
      std::ostringstream line;
      line << "amalgam: dim " << out.y.dim() << ", " << out.y.functionals().size() << " functionals";
      out.log.push_back(line.str());
      if (out.y.dim() > opts.max_dim) budget("dimension cap exceeded");
      if (out.y.functionals().size() > opts.max_functionals) budget("functional cap exceeded");
    }
  }

  out.j_isometric = op_norm(out.j, spaces[n], out.y) == 1 && inv_norm(out.j, spaces[n], out.y) == Rational(1);
  for (auto& c : out.checks) {
    const auto& xi = spaces[c.source];
    c.distance = op_norm(out.j * c.gamma - c.i_gamma, xi, out.y);
    c.i_isometric = op_norm(c.i_gamma, xi, out.y) == 1 && inv_norm(c.i_gamma, xi, out.y) == Rational(1);
  }
  BigInt bound = spaces[n].dim();
  for (std::size_t i = 0; i < n; ++i) bound *= boost::multiprecision::pow(BigInt(spaces[i].dim()), static_cast<unsigned>(out.net_sizes[i]));
  out.dim_bound_actual = bound;
  return out;
}

}  // namespace ramfac
