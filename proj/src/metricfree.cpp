#include "ramfac/metricfree.hpp"

#include <algorithm>
#include <functional>

#include "ramfac/lp.hpp"
#include "ramfac/polytope.hpp"

namespace ramfac {

FiniteMetricSpace::FiniteMetricSpace(std::vector<RatVec> d, std::size_t basepoint)
    : d_(std::move(d)), base_(basepoint) {
  const std::size_t n = d_.size();
  if (n == 0) throw DomainError("metric space: no points");
  if (base_ >= n) throw DomainError("metric space: basepoint out of range");
  for (const auto& row : d_)
    if (row.size() != n) throw DimensionError("metric space: distance matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i][i] != 0) throw DomainError("metric space: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (d_[i][j] != d_[j][i]) throw DomainError("metric space: distance matrix is not symmetric");
      if (i != j && d_[i][j] <= 0) throw DomainError("metric space: distinct points at distance <= 0");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d_[i][k] > d_[i][j] + d_[j][k])
          throw DomainError("metric space: triangle inequality fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")");
}

Rational FiniteMetricSpace::min_distance() const {
  Rational best = -1;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (best < 0 || d_[i][j] < best) best = d_[i][j];
  return best < 0 ? Rational(0) : best;
}

Rational FiniteMetricSpace::diameter() const {
  Rational best = 0;
  for (const auto& row : d_)
    for (const auto& v : row) best = std::max(best, v);
  return best;
}

std::vector<std::size_t> FiniteMetricSpace::coordinate_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (i != base_) out.push_back(i);
  return out;
}

Rational extension_constant(const FiniteMetricSpace& m) { return std::max(m.min_distance(), m.diameter() / 2); }

FiniteMetricSpace one_point_extension(const FiniteMetricSpace& m) {
  if (m.size() < 2) throw DomainError("one_point_extension: need at least two points");
  return one_point_extension(m, extension_constant(m));
}

namespace {

FiniteMetricSpace extend_with(const FiniteMetricSpace& m, const Rational& c) {
  if (c <= 0 || 2 * c < m.diameter()) throw DomainError("one_point_extension: distance too small for the triangle inequality");
  const std::size_t n = m.size();
  std::vector<RatVec> d(n + 1, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = m.d(i, j);
    d[i][n] = d[n][i] = c;
  }
  return FiniteMetricSpace(std::move(d), n);
}

}  // namespace

FiniteMetricSpace one_point_extension(const FiniteMetricSpace& m, const Rational& c) {
  if (m.size() < 2) throw DomainError("one_point_extension: need at least two points");
  return extend_with(m, c);
}

Rational lipschitz_norm(const FiniteMetricSpace& m, const RatVec& f) {
  if (f.size() != m.size()) throw DimensionError("lipschitz_norm: one value per point expected");
  if (f[m.basepoint()] != 0) throw DomainError("lipschitz_norm: f must vanish at the basepoint");
  Rational best = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Rational q = (f[i] - f[j]) / m.d(i, j);
      if (q < 0) q = -q;
      best = std::max(best, q);
    }
  return best;
}

namespace {

// Position of point x among the free-space coordinates, or npos for the basepoint.
std::vector<std::size_t> coord_index(const FiniteMetricSpace& m) {
  std::vector<std::size_t> idx(m.size(), SIZE_MAX);
  std::size_t c = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (i != m.basepoint()) idx[i] = c++;
  return idx;
}

}  // namespace

FreeVector delta(const FiniteMetricSpace& m, std::size_t x) {
  FreeVector v(m.size() - 1);
  const auto idx = coord_index(m);
  if (idx.at(x) != SIZE_MAX) v[idx[x]] = 1;
  return v;
}

std::vector<FreeVector> molecules(const FiniteMetricSpace& m) {
  std::vector<FreeVector> out;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y) out.push_back((1 / m.d(x, y)) * (delta(m, x) - delta(m, y)));
  return out;
}

FreeNormPair free_norm_lps(const FiniteMetricSpace& m, const FreeVector& v) {
  const std::size_t n = m.size(), k = n - 1;
  if (v.size() != k) throw DimensionError("free_norm: vector length must be n - 1");
  const auto idx = coord_index(m);
  FreeNormPair out;

  // Primal: v = ∑ (a⁺ − a⁻)_xy (δ_x − δ_y), minimize ∑ (a⁺ + a⁻) d(x,y).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  const std::size_t np = pairs.size();
  LinearProgram primal;
  primal.num_vars = 2 * np;
  primal.objective.assign(2 * np, 0);
  for (std::size_t e = 0; e < np; ++e) {
    const Rational& dxy = m.d(pairs[e].first, pairs[e].second);
    primal.objective[e] = -dxy;
    primal.objective[np + e] = -dxy;
  }
  for (std::size_t c = 0; c < k; ++c) {
    RatVec row(2 * np);
    for (std::size_t e = 0; e < np; ++e) {
      Rational coef = 0;
      if (idx[pairs[e].first] == c) coef += 1;
      if (idx[pairs[e].second] == c) coef -= 1;
      row[e] = coef;
      row[np + e] = -coef;
    }
    primal.add_eq(std::move(row), v[c]);
  }
  const auto pr = solve_lp(primal);
  if (pr.status != LpStatus::Optimal) throw Error("internal: molecule LP not optimal");
  out.primal = -pr.value;

  // Dual: maximize ∑ v_x f(x) with |f(x) − f(y)| <= d(x,y), f(p) = 0.
  LinearProgram dual;
  dual.num_vars = k;
  dual.free_var.assign(k, 1);
  dual.objective = v;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || (idx[x] == SIZE_MAX && idx[y] == SIZE_MAX)) continue;
      RatVec row(k);
      if (idx[x] != SIZE_MAX) row[idx[x]] += 1;
      if (idx[y] != SIZE_MAX) row[idx[y]] -= 1;
      dual.add_le(std::move(row), m.d(x, y));
    }
  const auto du = solve_lp(dual);
  if (du.status != LpStatus::Optimal) throw Error("internal: Lipschitz LP not optimal");
  out.dual = du.value;
  return out;
}

Rational free_norm(const FiniteMetricSpace& m, const FreeVector& v) {
  const auto p = free_norm_lps(m, v);
  if (p.primal != p.dual) throw Error("internal: free-space LPs disagree");
  return p.primal;
}

PolyhedralSpace free_space(const FiniteMetricSpace& m) {
  const std::size_t k = m.size() - 1;
  if (k == 0) throw DomainError("free_space: need at least two points");
  if (k > 5) throw BudgetError("free_space: dimension above 5");
  return PolyhedralSpace::from_vertices(extreme_generators(molecules(m), k), k, "free");
}

bool is_isometric_embedding(const FiniteMetricSpace& m, const FiniteMetricSpace& n,
                            const std::vector<std::size_t>& sigma) {
  if (sigma.size() != m.size()) return false;
  for (auto s : sigma)
    if (s >= n.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.d(i, j) != n.d(sigma[i], sigma[j])) return false;
  return true;
}

ExtendedEmbedding extend_embedding(const FiniteMetricSpace& m, const FiniteMetricSpace& n,
                                   const std::vector<std::size_t>& sigma) {
  if (!is_isometric_embedding(m, n, sigma)) throw DomainError("extend_embedding: sigma is not an isometric embedding");
  // Both sides use N's constant so that σ extends to an isometry M_∞ → N_∞.
  const Rational c = n.size() >= 2 ? extension_constant(n) : Rational(1);
  ExtendedEmbedding out{extend_with(m, c), extend_with(n, c), {}};
  // Coordinates are the original points in both extensions (basepoint is last).
  out.t = RatMatrix(n.size(), m.size());
  for (std::size_t x = 0; x < m.size(); ++x) out.t(sigma[x], x) = 1;
  return out;
}

namespace {

// Backtracking over injections into a target of size t with distance oracle.
void embed_search(const FiniteMetricSpace& m, std::size_t t,
                  const std::function<const Rational&(std::size_t, std::size_t)>& dist,
                  const std::function<bool(const std::vector<std::size_t>&)>& emit) {
  const std::size_t k = m.size();
  std::vector<std::size_t> img(k);
  std::vector<char> used(t, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) return emit(img);
    for (std::size_t c = 0; c < t; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = dist(img[j], c) == m.d(j, i);
      if (!ok) continue;
      img[i] = c;
      used[c] = 1;
      const bool go = rec(i + 1);
      used[c] = 0;
      if (!go) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_emb(const FiniteMetricSpace& m, const FiniteMetricSpace& n,
                                                    std::size_t max_target, std::size_t max_results) {
  if (n.size() > max_target) throw BudgetError("enumerate_emb: target space too large");
  std::vector<std::vector<std::size_t>> out;
  if (m.size() > n.size()) return out;
  bool over = false;
  embed_search(m, n.size(), [&](std::size_t a, std::size_t b) -> const Rational& { return n.d(a, b); },
               [&](const std::vector<std::size_t>& img) {
                 if (out.size() >= max_results) {
                   over = true;
                   return false;
                 }
                 out.push_back(img);
                 return true;
               });
  if (over) throw BudgetError("enumerate_emb: more than max_results embeddings");
  return out;
}

ArpProbe arp_probe(const FiniteMetricSpace& m, std::size_t dim, const Rational& rho, const Rational& step,
                   std::size_t max_embeddings) {
  if (step <= 0 || rho <= 0 || dim == 0) throw DomainError("arp_probe: step, rho and dim must be positive");
  const Rational hq = rho / step;
  const long half = (numerator(hq) / denominator(hq)).convert_to<long>();
  double count = 1;
  for (std::size_t i = 0; i < dim; ++i) count *= 2.0 * static_cast<double>(half) + 1;
  if (count > 4096) throw BudgetError("arp_probe: grid larger than 4096 points");
  std::vector<RatVec> grid;
  std::vector<long> idx(dim, -half);
  for (;;) {
    RatVec p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = step * idx[i];
    grid.push_back(std::move(p));
    std::size_t i = 0;
    while (i < dim && idx[i] == half) idx[i++] = -half;
    if (i == dim) break;
    ++idx[i];
  }
  const std::size_t g = grid.size();
  std::vector<Rational> dist(g * g);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) {
      Rational best = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        Rational v = grid[a][i] - grid[b][i];
        if (v < 0) v = -v;
        best = std::max(best, v);
      }
      dist[a * g + b] = best;
    }
  ArpProbe out;
  out.grid_points = g;
  embed_search(m, g, [&](std::size_t a, std::size_t b) -> const Rational& { return dist[a * g + b]; },
               [&](const std::vector<std::size_t>& img) {
                 if (out.embeddings == 0) {
                   out.first = img;
                   for (auto i : img) out.grid.push_back(grid[i]);
                 }
                 if (++out.embeddings >= max_embeddings) {
                   out.capped = true;
                   return false;
                 }
                 return true;
               });
  return out;
}

}  // namespace ramfac
