#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ramfac/lp.hpp"
#include "ramfac/polytope.hpp"

using namespace ramfac;

namespace {

RatVec v(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Cramer's rule for 3x3 systems; nullopt when singular.
std::optional<RatVec> cramer3(const std::vector<RatVec>& a, const RatVec& b) {
  auto det = [](const std::vector<RatVec>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const Rational d = det(a);
  if (d == 0) return std::nullopt;
  RatVec x(3);
  for (std::size_t c = 0; c < 3; ++c) {
    auto m = a;
    for (std::size_t r = 0; r < 3; ++r) m[r][c] = b[r];
    x[c] = det(m) / d;
  }
  return x;
}

// Vertices of {|f·x| <= 1} in R^3 by trying every triple of facet planes.
std::set<RatVec> brute_vertices3(const std::vector<RatVec>& fs) {
  std::vector<std::pair<RatVec, Rational>> planes;
  for (const auto& f : fs) {
    planes.push_back({f, 1});
    planes.push_back({-f, 1});
  }
  std::set<RatVec> out;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j)
      for (std::size_t k = j + 1; k < planes.size(); ++k) {
        const auto x = cramer3({planes[i].first, planes[j].first, planes[k].first},
                               {planes[i].second, planes[j].second, planes[k].second});
        if (!x) continue;
        bool ok = true;
        for (const auto& f : fs) ok = ok && abs(dot(f, *x)) <= 1;
        if (ok) out.insert(*x);
      }
  return out;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("inverse, rank, nullspace") {
    const auto a = RatMatrix::from_rows({v({2, 1}), v({1, 1})});
    CHECK(a * inverse(a) == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(RatMatrix::from_rows({v({1, 2}), v({2, 4})})), RankError);
    const auto b = RatMatrix::from_rows({v({1, 2, 3}), v({2, 4, 6})});
    CHECK(rank(b) == 1);
    const auto ns = nullspace(b);
    CHECK(ns.size() == 2);
    for (const auto& x : ns) CHECK(is_zero(b * x));
    CHECK(solve(b, v({1, 2})).has_value());
    CHECK_FALSE(solve(b, v({1, 3})).has_value());
    CHECK(independent_rows({v({1, 0}), v({2, 0}), v({0, 1})}, 2) == std::vector<std::size_t>{0, 2});
  }

  TEST_CASE("canonical forms") {
    CHECK(primitive({Rational(1, 2), Rational(-3, 4)}) == v({2, -3}));
    CHECK(sign_canonical(v({0, -1, 2})) == v({0, 1, -2}));
    CHECK(symmetric_representatives({v({1, 0}), v({-1, 0}), v({0, 0})}) == std::vector<RatVec>{v({1, 0})});
  }
}

TEST_SUITE("lp") {
  TEST_CASE("small programs") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = v({1, 1});
    lp.add_le(v({1, 2}), 4);
    lp.add_le(v({3, 1}), 6);
    auto r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rational(14, 5));

    LinearProgram inf;
    inf.num_vars = 1;
    inf.objective = v({1});
    inf.add_le(v({1}), -1);
    CHECK(solve_lp(inf).status == LpStatus::Infeasible);

    LinearProgram unb;
    unb.num_vars = 1;
    unb.objective = v({1});
    unb.add_le(v({-1}), 0);
    CHECK(solve_lp(unb).status == LpStatus::Unbounded);

    LinearProgram fr;
    fr.num_vars = 1;
    fr.objective = v({-1});
    fr.free_var = {1};
    fr.add_eq(v({2}), -3);
    r = solve_lp(fr);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.x[0] == Rational(-3, 2));
  }

  TEST_CASE("random 2-variable programs against vertex enumeration") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
      LinearProgram lp;
      lp.num_vars = 2;
      lp.free_var = {1, 1};
      lp.objective = {oracle::rnd(rng, -2, 2, 8), oracle::rnd(rng, -2, 2, 8)};
      std::vector<std::pair<RatVec, Rational>> cons{{v({1, 0}), 3}, {v({-1, 0}), 3}, {v({0, 1}), 3}, {v({0, -1}), 3}};
      for (int c = 0; c < 4; ++c) cons.push_back({{oracle::rnd(rng, -2, 2, 8), oracle::rnd(rng, -2, 2, 8)}, oracle::rnd(rng, -1, 2, 8)});
      for (const auto& [a, b] : cons) lp.add_le(a, b);
      std::optional<Rational> best;
      for (std::size_t i = 0; i < cons.size(); ++i)
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
          const auto& a = cons[i].first;
          const auto& b = cons[j].first;
          const Rational det = a[0] * b[1] - a[1] * b[0];
          if (det == 0) continue;
          const RatVec x{(cons[i].second * b[1] - a[1] * cons[j].second) / det,
                         (a[0] * cons[j].second - cons[i].second * b[0]) / det};
          bool ok = true;
          for (const auto& [c, rhs] : cons) ok = ok && dot(c, x) <= rhs;
          if (ok && (!best || dot(lp.objective, x) > *best)) best = dot(lp.objective, x);
        }
      const auto r = solve_lp(lp);
      if (!best) {
        CHECK(r.status == LpStatus::Infeasible);
      } else {
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == *best);
      }
    }
  }
}

TEST_SUITE("polytope") {
  TEST_CASE("cube and cross polytope") {
    CHECK(symmetric_vertices({v({1, 0}), v({0, 1})}, 2).size() == 4);
    CHECK(symmetric_vertices({v({1, 1}), v({1, -1})}, 2).size() == 4);
    CHECK(symmetric_vertices({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}, 3).size() == 8);
    CHECK_THROWS_AS(symmetric_vertices({v({1, 0})}, 2), DegenerateNormError);
    CHECK(extreme_generators({v({1, 0}), v({0, 1}), v({1, 1}), Rational(1, 2) * v({1, 1})}, 2).size() == 3);
  }

  TEST_CASE("random 3-dimensional bodies against the facet-triple oracle") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
      const auto x = oracle::random_space(rng, 3, 1 + t % 4);
      const auto got = symmetric_vertices(x.functionals(), 3);
      CHECK(std::set<RatVec>(got.begin(), got.end()) == brute_vertices3(x.functionals()));
    }
  }
}
