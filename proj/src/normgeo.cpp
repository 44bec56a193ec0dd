#include "ramfac/normgeo.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/mpfr.hpp>

#include "ramfac/lp.hpp"
#include "ramfac/polytope.hpp"

namespace ramfac {

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

void check_len(const RatVec& v, std::size_t dim, const char* what) {
  if (v.size() != dim) throw DimensionError(std::string(what) + ": vector length differs from dimension");
}

}  // namespace

PolyhedralSpace PolyhedralSpace::from_functionals(std::vector<RatVec> functionals, std::size_t dim,
                                                  std::string tag) {
  for (const auto& f : functionals) check_len(f, dim, "functional");
  PolyhedralSpace s;
  s.dim_ = dim;
  s.fs_ = symmetric_representatives(functionals);
  s.tag_ = std::move(tag);
  if (rank(s.fs_, dim) < dim) throw DegenerateNormError("functionals do not span the dual; norm is a seminorm");
  return s;
}

PolyhedralSpace PolyhedralSpace::from_vertices(std::vector<RatVec> vertices, std::size_t dim,
                                               std::string tag) {
  for (const auto& v : vertices) check_len(v, dim, "vertex");
  const auto reps = symmetric_representatives(vertices);
  if (rank(reps, dim) < dim) throw DegenerateNormError("vertices do not span; ball is flat");
  PolyhedralSpace s;
  s.dim_ = dim;
  s.fs_ = symmetric_representatives(symmetric_vertices(reps, dim));
  s.tag_ = std::move(tag);
  s.vs_ = std::make_shared<const std::vector<RatVec>>(symmetric_vertices(s.fs_, dim));
  return s;
}

PolyhedralSpace PolyhedralSpace::ell_inf(std::size_t k) {
  std::vector<RatVec> fs;
  for (std::size_t i = 0; i < k; ++i) {
    RatVec e(k);
    e[i] = 1;
    fs.push_back(std::move(e));
  }
  return from_functionals(std::move(fs), k, "linf");
}

PolyhedralSpace PolyhedralSpace::ell_1(std::size_t k) {
  std::vector<RatVec> fs;
  if (k > 0)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (k - 1)); ++s) {
      RatVec f(k, 1);
      for (std::size_t i = 1; i < k; ++i)
        if ((s >> (i - 1)) & 1) f[i] = -1;
      fs.push_back(std::move(f));
    }
  auto sp = from_functionals(std::move(fs), k, "l1");
  std::vector<RatVec> vs;
  for (std::size_t i = 0; i < k; ++i) {
    RatVec e(k);
    e[i] = 1;
    vs.push_back(e);
    vs.push_back(-e);
  }
  std::sort(vs.begin(), vs.end());
  sp.vs_ = std::make_shared<const std::vector<RatVec>>(std::move(vs));
  return sp;
}

const std::vector<RatVec>& PolyhedralSpace::vertices() const {
  if (!vs_) vs_ = std::make_shared<const std::vector<RatVec>>(symmetric_vertices(fs_, dim_));
  return *vs_;
}

std::vector<RatVec> PolyhedralSpace::dual_extreme_points() const { return extreme_generators(fs_, dim_); }

PolyhedralSpace PolyhedralSpace::irredundant() const {
  PolyhedralSpace s = *this;
  s.fs_ = dual_extreme_points();
  return s;
}

Rational PolyhedralSpace::norm(const RatVec& x) const {
  check_len(x, dim_, "norm");
  Rational best = 0;
  for (const auto& f : fs_) best = std::max(best, abs_q(dot(f, x)));
  return best;
}

Rational PolyhedralSpace::dual_norm(const RatVec& f) const {
  check_len(f, dim_, "dual norm");
  Rational best = 0;
  for (const auto& v : vertices()) best = std::max(best, abs_q(dot(f, v)));
  return best;
}

bool PolyhedralSpace::descriptions_agree() const {
  if (!vs_) return true;
  const auto from_h = symmetric_vertices(fs_, dim_);
  const auto from_v = symmetrize(extreme_generators(*vs_, dim_));
  return from_h == from_v;
}

Rational op_norm(const RatMatrix& t, const PolyhedralSpace& x, const PolyhedralSpace& y) {
  if (t.cols() != x.dim() || t.rows() != y.dim()) throw DimensionError("op_norm: matrix shape does not match spaces");
  Rational best = 0;
  for (const auto& v : x.vertices()) best = std::max(best, y.norm(t * v));
  return best;
}

std::optional<Rational> inv_norm(const RatMatrix& t, const PolyhedralSpace& x,
                                 const PolyhedralSpace& y) {
  if (t.cols() != x.dim() || t.rows() != y.dim()) throw DimensionError("inv_norm: matrix shape does not match spaces");
  const auto echelon = rref(t);
  const std::size_t r = echelon.pivots.size();
  if (r == 0) return std::nullopt;
  if (r == x.dim()) {
    // Injective: pull the norm of Y back to X and compare balls there.
    std::vector<RatVec> pulled;
    for (const auto& h : y.functionals()) pulled.push_back(left_mul(h, t));
    const auto xt = PolyhedralSpace::from_functionals(std::move(pulled), x.dim());
    Rational best = 0;
    for (const auto& u : xt.vertices()) best = std::max(best, x.norm(u));
    return best;
  }
  // Work in coordinates of a basis B of the range.
  std::vector<RatVec> bcols;
  for (auto p : echelon.pivots) bcols.push_back(t.col(p));
  const RatMatrix b = RatMatrix::from_cols(bcols, y.dim());
  std::vector<RatVec> range_fs;
  for (const auto& h : y.functionals()) range_fs.push_back(left_mul(h, b));
  const auto range_space = PolyhedralSpace::from_functionals(std::move(range_fs), r);
  std::vector<RatVec> image;
  for (const auto& v : x.vertices()) image.push_back(*solve(b, t * v));
  const auto image_space = PolyhedralSpace::from_vertices(std::move(image), r);
  Rational best = 0;
  for (const auto& u : range_space.vertices()) best = std::max(best, image_space.norm(u));
  return best;
}

LogValue make_log(const Rational& arg) {
  return {arg, std::log(arg.convert_to<double>())};
}

namespace {

// ‖Id‖_{A,B}
Rational id_norm(const PolyhedralSpace& a, const PolyhedralSpace& b) {
  if (a.dim() != b.dim()) throw DimensionError("spaces of different dimension");
  Rational best = 0;
  for (const auto& v : a.vertices()) best = std::max(best, b.norm(v));
  return best;
}

// min over g in conv(±gens) of max over v in vs of |(f - g)·v|.
Rational dist_to_hull(const RatVec& f, const std::vector<RatVec>& gens, const std::vector<RatVec>& vs) {
  const std::size_t m = gens.size();
  LinearProgram lp;
  lp.num_vars = 2 * m + 1;  // λ⁺, λ⁻, t
  lp.objective.assign(lp.num_vars, 0);
  lp.objective[2 * m] = -1;
  RatVec simplex(lp.num_vars, 1);
  simplex[2 * m] = 0;
  lp.add_le(std::move(simplex), 1);
  for (const auto& v : vs) {
    RatVec up(lp.num_vars), down(lp.num_vars);
    for (std::size_t j = 0; j < m; ++j) {
      const Rational gv = dot(gens[j], v);
      up[j] = -gv;
      up[m + j] = gv;
      down[j] = gv;
      down[m + j] = -gv;
    }
    up[2 * m] = -1;
    down[2 * m] = -1;
    const Rational fv = dot(f, v);
    lp.add_le(std::move(up), -fv);
    lp.add_le(std::move(down), fv);
  }
  const auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) throw Error("internal: distance LP not optimal");
  return -res.value;
}

}  // namespace

LogValue omega(const PolyhedralSpace& n, const PolyhedralSpace& p) {
  return make_log(std::max(id_norm(n, p), id_norm(p, n)));
}

Rational alpha(const PolyhedralSpace& n, const PolyhedralSpace& p, const PolyhedralSpace& q) {
  if (n.dim() != p.dim() || n.dim() != q.dim()) throw DimensionError("alpha: spaces of different dimension");
  const auto nv = symmetric_representatives(n.vertices());
  Rational best = 0;
  for (const auto& f : p.dual_extreme_points()) best = std::max(best, dist_to_hull(f, q.functionals(), nv));
  for (const auto& g : q.dual_extreme_points()) best = std::max(best, dist_to_hull(g, p.functionals(), nv));
  return best;
}

SandwichCheck sandwich_check(const PolyhedralSpace& n, const PolyhedralSpace& p,
                             const PolyhedralSpace& q) {
  SandwichCheck c;
  c.lambda = std::max({id_norm(n, p), id_norm(p, n), id_norm(n, q), id_norm(q, n)});
  c.omega_pq = omega(p, q);
  c.alpha_pq = alpha(n, p, q);
  const Rational& r = c.omega_pq.arg;
  const Rational& a = c.alpha_pq;
  const Rational& l = c.lambda;
  c.rational_certificate = a <= l * (1 - 1 / r) && r <= 1 + l * a;
  if (a == 0) {
    c.log_form = r == 1;
  } else {
    using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;
    const Big om = log(Big(r));
    const Big am(a), lm(l);
    c.log_form = om / lm <= am && am <= lm * om;
  }
  return c;
}

Rational gap_metric(const RatMatrix& v, const RatMatrix& w, const PolyhedralSpace& z) {
  if (v.rows() != z.dim() || w.rows() != z.dim()) throw DimensionError("gap_metric: bases live in a different space");
  if (v.cols() == 0 || w.cols() == 0 || rank(v) < v.cols() || rank(w) < w.cols())
    throw DomainError("gap_metric: columns are not a basis");
  // sup over the vertices of Ball(span a) of the distance to Ball(span b).
  auto one_side = [&](const RatMatrix& a, const RatMatrix& b) {
    std::vector<RatVec> fa;
    for (const auto& h : z.functionals()) fa.push_back(left_mul(h, a));
    const auto sa = PolyhedralSpace::from_functionals(std::move(fa), a.cols());
    const std::size_t m = b.cols();
    Rational best = 0;
    for (const auto& c : symmetric_representatives(sa.vertices())) {
      const RatVec pt = a * c;
      LinearProgram lp;
      lp.num_vars = m + 1;
      lp.free_var.assign(m + 1, 1);
      lp.free_var[m] = 0;
      lp.objective.assign(m + 1, 0);
      lp.objective[m] = -1;
      for (const auto& h : z.functionals()) {
        const RatVec hb = left_mul(h, b);
        const Rational hp = dot(h, pt);
        RatVec r1(m + 1), r2(m + 1), r3(m + 1), r4(m + 1);
        for (std::size_t j = 0; j < m; ++j) {
          r1[j] = -hb[j];
          r2[j] = hb[j];
          r3[j] = hb[j];
          r4[j] = -hb[j];
        }
        r1[m] = -1;
        r2[m] = -1;
        lp.add_le(std::move(r1), -hp);  // h·(pt - b c') <= t
        lp.add_le(std::move(r2), hp);   // -h·(pt - b c') <= t
        lp.add_le(std::move(r3), 1);
        lp.add_le(std::move(r4), 1);
      }
      const auto res = solve_lp(lp);
      if (res.status != LpStatus::Optimal) throw Error("internal: gap LP not optimal");
      best = std::max(best, Rational(-res.value));
    }
    return best;
  };
  return std::max(one_side(v, w), one_side(w, v));
}

namespace {

std::optional<Rational> distortion(const RatMatrix& d, const PolyhedralSpace& x, const PolyhedralSpace& y) {
  RatMatrix inv;
  try {
    inv = inverse(d);
  } catch (const RankError&) {
    return std::nullopt;
  }
  return op_norm(d, x, y) * op_norm(inv, y, x);
}

// Ordered k-tuples from pool, lexicographic in pool index, up to cap of them.
template <class F>
void for_tuples(std::size_t pool, std::size_t k, std::size_t cap, F&& f) {
  std::vector<std::size_t> idx(k, 0);
  std::size_t done = 0;
  while (done < cap) {
    f(idx);
    ++done;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < pool) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

BmEstimate bm_upper(const PolyhedralSpace& x, const PolyhedralSpace& y, std::size_t effort,
                    std::uint64_t seed) {
  const std::size_t k = x.dim();
  if (y.dim() != k) throw DimensionError("bm_upper: spaces of different dimension");
  BmEstimate best;
  best.map = RatMatrix::identity(k);
  best.kappa = *distortion(best.map, x, y);
  best.candidates = 1;
  auto consider = [&](const RatMatrix& d) {
    if (best.candidates >= effort) return;
    ++best.candidates;
    auto kap = distortion(d, x, y);
    if (kap && *kap < best.kappa) {
      best.kappa = *kap;
      best.map = d;
    }
  };

  // Vertex matching in both directions: a fixed vertex basis of one space is
  // sent to every ordered tuple of vertices of the other.
  auto basis_of = [&](const PolyhedralSpace& s) {
    const auto reps = symmetric_representatives(s.vertices());
    std::vector<RatVec> cols;
    for (auto i : independent_rows(reps, k)) cols.push_back(reps[i]);
    return RatMatrix::from_cols(cols, k);
  };
  const RatMatrix bx = basis_of(x), by = basis_of(y);
  const RatMatrix bx_inv = inverse(bx);
  const auto& vy = y.vertices();
  const auto& vx = x.vertices();
  for_tuples(vy.size(), k, effort / 2, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> cols;
    for (auto i : idx) cols.push_back(vy[i]);
    consider(RatMatrix::from_cols(cols, k) * bx_inv);
  });
  for_tuples(vx.size(), k, effort / 2, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> cols;
    for (auto i : idx) cols.push_back(vx[i]);
    const RatMatrix u = RatMatrix::from_cols(cols, k);
    if (rank(u) == k) consider(by * inverse(u));
  });

  // Coordinate perturbations of the incumbent with shrinking dyadic steps.
  std::mt19937_64 rng(seed);
  Rational step(1, 2);
  std::size_t stale = 0;
  while (best.candidates < effort && best.kappa > 1) {
    RatMatrix d = best.map;
    const std::size_t i = rng() % k, j = rng() % k;
    d(i, j) += (rng() & 1) ? step : Rational(-step);
    const Rational before = best.kappa;
    consider(d);
    if (best.kappa < before) {
      stale = 0;
    } else if (++stale >= 4 * k * k) {
      step /= 2;
      stale = 0;
      if (step < Rational(1, 1 << 20)) break;
    }
  }
  best.log_kappa = std::log(best.kappa.convert_to<double>());
  return best;
}

double GramNorm::norm(const RatVec& x) const { return std::sqrt(dot(x, gram * x).convert_to<double>()); }

double GramNorm::dual_norm(const RatVec& f) const {
  const RatMatrix inv = inverse(gram);
  return std::sqrt(dot(f, inv * f).convert_to<double>());
}

NormInput pushforward_norm(const RatMatrix& a, int p) {
  if (rank(a) < a.cols()) throw DegenerateNormError("pushforward_norm: matrix is not of full column rank");
  if (p == 2) return GramNorm{a.transpose() * a};
  std::vector<RatVec> fs;
  if (p == 0) {
    fs = a.row_list();
  } else if (p == 1) {
    const std::size_t n = a.rows();
    if (n > 20) throw BudgetError("pushforward_norm: too many sign patterns for p = 1");
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) {
      RatVec sign(n, 1);
      for (std::size_t i = 1; i < n; ++i)
        if ((s >> (i - 1)) & 1) sign[i] = -1;
      fs.push_back(left_mul(sign, a));
    }
  } else {
    throw DomainError("pushforward_norm: p must be 1, 2 or infinity");
  }
  auto sp = PolyhedralSpace::from_functionals(std::move(fs), a.cols(), p == 0 ? "pushforward-linf" : "pushforward-l1");
  return sp.irredundant();
}

Envelope injective_envelope(const PolyhedralSpace& f) {
  auto ext = f.dual_extreme_points();
  if (rank(ext, f.dim()) < f.dim()) throw DegenerateNormError("injective_envelope: dual ball is degenerate");
  std::sort(ext.begin(), ext.end(), [](const RatVec& a, const RatVec& b) { return b < a; });
  return {ext.size(), RatMatrix::from_rows(ext, f.dim())};
}

std::optional<RatMatrix> factor_through_envelope(const Envelope& env, const PolyhedralSpace& f,
                                                 const RatMatrix& t) {
  if (t.cols() != f.dim()) throw DimensionError("factor_through_envelope: T has the wrong domain");
  const std::size_t d = env.d, n = t.rows();
  RatMatrix u(n, d);
  std::vector<char> hit(d, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const RatVec tj = t.row(j);
    bool matched = false;
    for (std::size_t i = 0; i < d && !matched; ++i) {
      const RatVec psi = env.psi.row(i);
      if (tj == psi || tj == -psi) {
        u(j, i) = tj == psi ? 1 : -1;
        hit[i] = 1;
        matched = true;
      }
    }
    if (matched) continue;
    LinearProgram lp;
    lp.num_vars = 2 * d;
    lp.objective.assign(2 * d, 0);
    lp.add_le(RatVec(2 * d, 1), 1);
    for (std::size_t c = 0; c < f.dim(); ++c) {
      RatVec row(2 * d);
      for (std::size_t i = 0; i < d; ++i) {
        row[i] = env.psi(i, c);
        row[d + i] = -env.psi(i, c);
      }
      lp.add_eq(std::move(row), tj[c]);
    }
    const auto res = solve_lp(lp);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    for (std::size_t i = 0; i < d; ++i) u(j, i) = res.x[i] - res.x[d + i];
  }
  for (auto h : hit)
    if (!h) return std::nullopt;
  if (u * env.psi != t) return std::nullopt;
  return u;
}

Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                         std::uint64_t den) {
  const std::uint64_t i = rng() % (den + 1);
  return lo + (hi - lo) * Rational(BigInt(i), BigInt(den));
}

}  // namespace ramfac
