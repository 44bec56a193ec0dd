#include "ramfac/polytope.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "ramfac/lp.hpp"

namespace ramfac {

RatVec primitive(const RatVec& v) {
  BigInt l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, BigInt(denominator(q)));
  BigInt g = 0;
  for (const auto& q : v) g = boost::multiprecision::gcd(g, BigInt(numerator(q) * (l / denominator(q))));
  if (g == 0) return v;
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(numerator(v[i]) * (l / denominator(v[i])) / g);
  return out;
}

RatVec sign_canonical(RatVec v) {
  for (const auto& q : v) {
    if (q == 0) continue;
    if (q < 0)
      for (auto& x : v) x = -x;
    break;
  }
  return v;
}

std::vector<RatVec> symmetric_representatives(const std::vector<RatVec>& vs) {
  std::vector<RatVec> out;
  for (const auto& v : vs)
    if (!is_zero(v)) out.push_back(sign_canonical(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatVec> symmetrize(const std::vector<RatVec>& vs) {
  std::vector<RatVec> out;
  for (const auto& v : vs) {
    out.push_back(v);
    out.push_back(-v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Ray {
  RatVec y;
  boost::dynamic_bitset<> zero;
};

}  // namespace

std::vector<RatVec> symmetric_vertices(const std::vector<RatVec>& functionals, std::size_t dim,
                                       std::size_t max_dim) {
  if (dim == 0) return {};
  if (dim > max_dim) throw BudgetError("vertex enumeration above dimension " + std::to_string(max_dim));
  const auto reps = symmetric_representatives(functionals);
  for (const auto& f : reps)
    if (f.size() != dim) throw DimensionError("functional length differs from dimension");
  if (rank(reps, dim) < dim) throw DegenerateNormError("functionals do not span the dual; norm is a seminorm");

  // Constraint g·(x,t) <= 0 for g = (±f, -1).
  std::vector<RatVec> cons;
  for (const auto& f : reps)
    for (int s : {1, -1}) {
      RatVec g(dim + 1);
      for (std::size_t i = 0; i < dim; ++i) g[i] = s * f[i];
      g[dim] = -1;
      cons.push_back(std::move(g));
    }
  const std::size_t m = cons.size(), D = dim + 1;

  const auto base = independent_rows(cons, D);
  RatMatrix gb(D, D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) gb(i, j) = cons[base[i]][j];
  const RatMatrix ginv = inverse(gb);

  boost::dynamic_bitset<> processed(m);
  for (auto b : base) processed.set(b);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < D; ++j) {
    Ray r{primitive(Rational(-1) * ginv.col(j)), boost::dynamic_bitset<>(m)};
    for (std::size_t i = 0; i < D; ++i)
      if (i != j) r.zero.set(base[i]);
    rays.push_back(std::move(r));
  }

  for (std::size_t c = 0; c < m; ++c) {
    if (processed.test(c)) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(cons[c], rays[i].y);
      if (val[i] > 0)
        pos.push_back(i);
      else {
        if (val[i] < 0) neg.push_back(i);
        next.push_back(rays[i]);
        if (val[i] == 0) next.back().zero.set(c);
      }
    }
    for (auto p : pos)
      for (auto q : neg) {
        const auto common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < D) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray nr{primitive(val[p] * rays[q].y - val[q] * rays[p].y), common};
        nr.zero.set(c);
        next.push_back(std::move(nr));
      }
    processed.set(c);
    rays = std::move(next);
  }

  std::vector<RatVec> out;
  for (const auto& r : rays) {
    if (r.y[dim] <= 0) throw DegenerateNormError("unbounded ball");
    RatVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = r.y[i] / r.y[dim];
    out.push_back(std::move(v));
  }
  return symmetrize(out);
}

std::vector<RatVec> extreme_generators(const std::vector<RatVec>& gens, std::size_t dim) {
  const auto reps = symmetric_representatives(gens);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    // reps[i] in conv(±reps[j], j != i) (with 0 allowed) means not extreme.
    LinearProgram lp;
    const std::size_t others = reps.size() - 1;
    lp.num_vars = 2 * others;
    lp.objective.assign(lp.num_vars, 0);
    lp.add_le(RatVec(lp.num_vars, 1), 1);
    for (std::size_t k = 0; k < dim; ++k) {
      RatVec row(lp.num_vars);
      std::size_t col = 0;
      for (std::size_t j = 0; j < reps.size(); ++j) {
        if (j == i) continue;
        row[col] = reps[j][k];
        row[others + col] = -reps[j][k];
        ++col;
      }
      lp.add_eq(std::move(row), reps[i][k]);
    }
    if (solve_lp(lp).status == LpStatus::Infeasible) out.push_back(reps[i]);
  }
  return out;
}

}  // namespace ramfac
