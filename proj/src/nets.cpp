#include "ramfac/nets.hpp"

#include <algorithm>
#include <cmath>

#include "ramfac/polytope.hpp"

namespace ramfac {

BigInt floor_pow(const Rational& q, std::size_t k) {
  Rational p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= q;
  BigInt n = numerator(p), d = denominator(p);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

std::vector<RatVec> greedy_separated(const std::vector<RatVec>& seeds, const std::vector<RatVec>& candidates,
                                     const std::function<bool(const RatVec&, const RatVec&)>& farther) {
  std::vector<RatVec> kept = seeds;
  for (const auto& c : candidates) {
    bool ok = true;
    for (const auto& k : kept)
      if (!farther(c, k)) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(c);
  }
  return kept;
}

namespace {

// Calls f on every point of the grid {i/per_unit : |i| <= bound·per_unit}^k.
template <class F>
void for_grid(std::size_t k, long half, std::size_t per_unit, F&& f) {
  std::vector<long> idx(k, -half);
  RatVec pt(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) pt[i] = Rational(idx[i], static_cast<long>(per_unit));
    f(pt, idx);
    std::size_t i = 0;
    while (i < k && idx[i] == half) idx[i++] = -half;
    if (i == k) return;
    ++idx[i];
  }
}

std::size_t default_per_unit(const Rational& eps) {
  const Rational q = 4 / eps;
  BigInt c = numerator(q) / denominator(q);
  if (c * denominator(q) != numerator(q)) c += 1;
  return std::max<std::size_t>(1, c.convert_to<std::size_t>());
}

double grid_size(std::size_t k, long half) { return std::pow(2.0 * static_cast<double>(half) + 1, static_cast<double>(k)); }

}  // namespace

std::vector<RatVec> sphere_candidates(const PolyhedralSpace& x, const Rational& rho, std::size_t per_unit) {
  const std::size_t k = x.dim();
  const long half = static_cast<long>(per_unit);
  std::vector<RatVec> out;
  for_grid(k, half, per_unit, [&](const RatVec& g, const std::vector<long>& idx) {
    bool on_boundary = false;
    for (auto v : idx)
      if (v == half || v == -half) on_boundary = true;
    if (!on_boundary) return;
    out.push_back((rho / x.norm(g)) * g);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Net eps_net(const PolyhedralSpace& x, const Rational& eps, NetMode mode, const NetOptions& opts) {
  if (eps <= 0) throw DomainError("eps_net: eps must be positive");
  const std::size_t k = x.dim();
  Net net;
  net.eps = eps;
  auto dist_gt = [&](const Rational& sep) {
    return [&x, sep](const RatVec& a, const RatVec& b) { return x.norm(a - b) > sep; };
  };

  if (mode == NetMode::BallGreedy) {
    if (opts.radius <= 0) throw DomainError("eps_net: radius must be positive");
    const std::size_t per_unit = opts.grid_per_unit ? opts.grid_per_unit : default_per_unit(eps);
    net.grid_step = Rational(1, static_cast<long>(per_unit));
    // Box [-R, R]^k containing radius·Ball(X).
    Rational box = 0;
    for (const auto& v : x.vertices())
      for (const auto& c : v) box = std::max(box, c < 0 ? Rational(-c) : c);
    box *= opts.radius;
    const Rational hq = box * static_cast<long>(per_unit);
    BigInt h = numerator(hq) / denominator(hq);
    const long half = h.convert_to<long>();
    if (grid_size(k, half) > static_cast<double>(opts.max_candidates))
      throw BudgetError("eps_net: candidate grid exceeds max_candidates");
    std::vector<RatVec> cands;
    for_grid(k, half, per_unit, [&](const RatVec& g, const std::vector<long>&) {
      if (x.norm(g) <= opts.radius) cands.push_back(g);
    });
    net.candidates = cands.size();
    std::vector<RatVec> seeds = opts.seed;
    if (seeds.empty()) seeds.push_back(RatVec(k));
    net.points = greedy_separated(seeds, cands, dist_gt(eps));
    net.bound = floor_pow(1 + 2 * opts.radius / eps, k);
    net.separated = true;
    for (std::size_t i = 0; i < net.points.size() && net.separated; ++i)
      for (std::size_t j = i + 1; j < net.points.size(); ++j)
        if (x.norm(net.points[i] - net.points[j]) <= eps) {
          net.separated = false;
          break;
        }
    net.dense_on_grid = std::all_of(cands.begin(), cands.end(), [&](const RatVec& c) {
      return std::any_of(net.points.begin(), net.points.end(),
                         [&](const RatVec& p) { return x.norm(c - p) <= eps; });
    });
    return net;
  }

  // Shell mode with eps' = eps/2: spheres at radii 1 - i·eps' plus the origin.
  const Rational e2 = eps / 2;
  const Rational inv = 1 / e2;
  const BigInt m_big = numerator(inv) / denominator(inv) - 1;
  const long m = m_big.convert_to<long>();
  const std::size_t per_unit = opts.grid_per_unit ? opts.grid_per_unit : default_per_unit(e2);
  net.grid_step = Rational(1, static_cast<long>(per_unit));
  const double per_sphere = grid_size(k, static_cast<long>(per_unit)) - grid_size(k, static_cast<long>(per_unit) - 1);
  if (per_sphere * static_cast<double>(m + 1) > static_cast<double>(opts.max_candidates))
    throw BudgetError("eps_net: shell candidates exceed max_candidates");
  net.points.push_back(RatVec(k));
  net.separated = true;
  net.dense_on_grid = true;
  for (long i = 0; i <= m; ++i) {
    const Rational rho = 1 - i * e2;
    const auto cands = sphere_candidates(x, rho, per_unit);
    net.candidates += cands.size();
    std::vector<RatVec> seeds;
    if (i == 0)
      for (const auto& s : opts.seed)
        if (x.norm(s) == 1) seeds.push_back(s);
    auto di = greedy_separated(seeds, cands, dist_gt(e2));
    for (std::size_t a = 0; a < di.size(); ++a)
      for (std::size_t b = a + 1; b < di.size(); ++b)
        if (x.norm(di[a] - di[b]) <= e2) net.separated = false;
    for (const auto& c : cands)
      if (std::none_of(di.begin(), di.end(), [&](const RatVec& p) { return x.norm(c - p) <= e2; }))
        net.dense_on_grid = false;
    net.points.insert(net.points.end(), di.begin(), di.end());
  }
  net.bound = floor_pow(1 + 4 / eps, k);
  return net;
}

ShellReport check_shell_property(const PolyhedralSpace& x, const Net& net, std::size_t samples,
                                 std::uint64_t seed) {
  const std::size_t k = x.dim();
  Rational box = 0;
  for (const auto& v : x.vertices())
    for (const auto& c : v) box = std::max(box, c < 0 ? Rational(-c) : c);
  std::mt19937_64 rng(seed);
  ShellReport rep;
  while (rep.samples < samples) {
    RatVec p(k);
    for (auto& c : p) c = random_rational(rng, -box, box, 1000003);
    const Rational n = x.norm(p);
    if (n == 0 || n > 1) continue;
    ++rep.samples;
    const bool ok = std::any_of(net.points.begin(), net.points.end(), [&](const RatVec& y) {
      return x.norm(y) < n && x.norm(p - y) < net.eps;
    });
    if (!ok) ++rep.failures;
  }
  return rep;
}

namespace {

// Rational points on the Euclidean unit sphere of R^k via inverse
// stereographic projection of a grid, together with their negatives.
std::vector<RatVec> euclidean_sphere_points(std::size_t k, std::size_t per_unit) {
  std::vector<RatVec> out;
  if (k == 1) return {{Rational(-1)}, {Rational(1)}};
  const long half = static_cast<long>(per_unit);
  for_grid(k - 1, half, per_unit, [&](const RatVec& u, const std::vector<long>&) {
    const Rational s = dot(u, u);
    RatVec p(k);
    for (std::size_t i = 0; i + 1 < k; ++i) p[i] = 2 * u[i] / (s + 1);
    p[k - 1] = (s - 1) / (s + 1);
    out.push_back(p);
    out.push_back(-p);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Approximation polyhedral_approx(const NormInput& input, const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw DomainError("polyhedral_approx: eps must lie in (0, 1)");
  Approximation out;
  out.delta = eps / (1 + eps);
  const std::size_t k = std::visit([](const auto& s) { return s.dim(); }, input);
  out.bound = floor_pow((2 + 3 * eps) / eps, k);
  const std::size_t per_unit = default_per_unit(out.delta);

  if (const auto* x = std::get_if<PolyhedralSpace>(&input)) {
    auto irr = x->irredundant();
    if (BigInt(2 * irr.functionals().size()) <= out.bound) {
      out.space = irr;
      out.exact_copy = true;
      return out;
    }
    // δ-net of the dual sphere, measured in the dual norm.
    const auto dual = PolyhedralSpace::from_functionals(symmetric_representatives(x->vertices()), k);
    const auto seeds = greedy_separated({}, symmetrize(irr.functionals()), [&](const RatVec& a, const RatVec& b) {
      return dual.norm(a - b) > out.delta;
    });
    const auto d = greedy_separated(seeds, sphere_candidates(dual, 1, per_unit),
                                    [&](const RatVec& a, const RatVec& b) { return dual.norm(a - b) > out.delta; });
    out.space = PolyhedralSpace::from_functionals(d, k, "approx");
    return out;
  }

  const auto& g = std::get<GramNorm>(input);
  if (k > 3) throw BudgetError("polyhedral_approx: Euclidean-type input limited to dimension 3");
  const RatMatrix ginv = inverse(g.gram);
  auto dual_sq = [&](const RatVec& f) { return dot(f, ginv * f); };
  std::vector<RatVec> cands;
  for (auto f : euclidean_sphere_points(k, 2 * per_unit)) {
    // Scale onto the dual sphere from inside; exact when G = I.
    Rational q = dual_sq(f);
    if (q != 1) {
      const double s = 1.0 / std::sqrt(q.convert_to<double>());
      Rational sr(static_cast<long long>(std::floor(s * 1e12)), 1000000000000LL);
      while (dual_sq(sr * f) > 1) sr -= Rational(1, 1000000000000LL);
      f = sr * f;
    }
    cands.push_back(std::move(f));
  }
  const Rational d2 = out.delta * out.delta;
  const auto d = greedy_separated({}, cands, [&](const RatVec& a, const RatVec& b) { return dual_sq(a - b) > d2; });
  out.space = PolyhedralSpace::from_functionals(d, k, "approx");
  return out;
}

}  // namespace ramfac
