#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "ramfac/normgeo.hpp"

using namespace ramfac;

namespace {

RatVec v(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RatMatrix m(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVec> rs;
  for (auto r : rows) rs.push_back(v(r));
  return RatMatrix::from_rows(rs);
}

}  // namespace

TEST_SUITE("normgeo") {
  TEST_CASE("standard balls") {
    const auto li = PolyhedralSpace::ell_inf(2), l1 = PolyhedralSpace::ell_1(2);
    CHECK(std::set<RatVec>(li.vertices().begin(), li.vertices().end()) ==
          std::set<RatVec>{v({1, 1}), v({1, -1}), v({-1, 1}), v({-1, -1})});
    CHECK(std::set<RatVec>(l1.vertices().begin(), l1.vertices().end()) ==
          std::set<RatVec>{v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})});
    CHECK(l1.norm(v({3, 4})) == 7);
    CHECK(li.norm(v({3, -4})) == 4);
    CHECK(l1.dual_norm(v({3, -4})) == 4);
    CHECK_THROWS_AS(PolyhedralSpace::from_functionals({v({1, 1})}, 2), DegenerateNormError);
    CHECK(li.descriptions_agree());
  }

  TEST_CASE("operator norms") {
    const auto li = PolyhedralSpace::ell_inf(2), l1 = PolyhedralSpace::ell_1(2);
    CHECK(op_norm(RatMatrix::identity(2), li, li) == 1);
    CHECK(inv_norm(RatMatrix::identity(2), li, li) == Rational(1));
    const auto t = m({{1, 1}, {1, -1}});
    CHECK(op_norm(t, l1, li) == 1);
    CHECK(inv_norm(t, l1, li) == Rational(1));
    RatMatrix d = RatMatrix::identity(2);
    d(1, 1) = Rational(1, 2);
    CHECK(op_norm(d, li, li) == 1);
    CHECK(inv_norm(d, li, li) == Rational(2));
    CHECK_FALSE(inv_norm(RatMatrix(2, 2), li, li).has_value());
  }

  TEST_CASE("omega, alpha, gap on small examples") {
    const auto li = PolyhedralSpace::ell_inf(2), l1 = PolyhedralSpace::ell_1(2);
    CHECK(omega(li, li).arg == 1);
    CHECK(omega(li, li).value == 0.0);
    CHECK(alpha(li, l1, l1) == 0);
    CHECK(omega(l1, li).arg == 2);
    CHECK(alpha(l1, l1, li) == Rational(1, 2));
    const auto e0 = RatMatrix::from_cols({v({1, 0})}), e1 = RatMatrix::from_cols({v({0, 1})});
    CHECK(gap_metric(e0, e0, li) == 0);
    CHECK(gap_metric(e0, e1, li) == 1);
    CHECK_THROWS_AS(gap_metric(RatMatrix::from_cols({v({0, 0})}), e1, li), DomainError);
  }

  TEST_CASE("Banach-Mazur upper bound") {
    const auto li = PolyhedralSpace::ell_inf(2), l1 = PolyhedralSpace::ell_1(2);
    const auto e = bm_upper(l1, li);
    CHECK(e.kappa == 1);
    CHECK(e.log_kappa == 0.0);
    CHECK(op_norm(e.map, l1, li) * *inv_norm(e.map, l1, li) == 1);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 5; ++t) {
      const auto x = oracle::random_space(rng, 2);
      CHECK(bm_upper(x, x, 50).kappa == 1);
      const auto y = oracle::random_space(rng, 2);
      const auto b = bm_upper(x, y, 200, 9);
      CHECK(b.kappa >= 1);
      CHECK(b.kappa == op_norm(b.map, x, y) * *inv_norm(b.map, x, y));
      CHECK(bm_upper(x, y, 200, 9).kappa == b.kappa);
    }
  }

  TEST_CASE("pushforward norms") {
    const auto a = std::get<PolyhedralSpace>(pushforward_norm(RatMatrix::identity(2), 0));
    CHECK(a.vertices() == PolyhedralSpace::ell_inf(2).vertices());
    const auto b = std::get<PolyhedralSpace>(pushforward_norm(m({{1}, {1}}), 1));
    CHECK(b.norm(v({3})) == 6);
    CHECK_THROWS_AS(pushforward_norm(m({{1, 1}, {1, 1}}), 0), DegenerateNormError);
    const auto g = std::get<GramNorm>(pushforward_norm(RatMatrix::identity(2), 2));
    CHECK(std::abs(g.norm(v({3, 4})) - 5.0) < 1e-12);
  }

  TEST_CASE("pushforward under signed permutations") {
    const auto a = m({{1, 2}, {-1, 1}, {0, 3}});
    const auto base = std::get<PolyhedralSpace>(pushforward_norm(a, 0));
    for (int perm = 0; perm < 2; ++perm)
      for (int s0 = -1; s0 <= 1; s0 += 2)
        for (int s1 = -1; s1 <= 1; s1 += 2) {
          RatMatrix u(2, 2);
          u(perm, 0) = s0;
          u(1 - perm, 1) = s1;
          const auto moved = std::get<PolyhedralSpace>(pushforward_norm(a * u, 0));
          // x -> u x is an isometry from nu(A u) onto nu(A)
          CHECK(op_norm(u, moved, base) == 1);
          CHECK(inv_norm(u, moved, base) == Rational(1));
        }
  }

  TEST_CASE("injective envelope") {
    const auto li = injective_envelope(PolyhedralSpace::ell_inf(3));
    CHECK(li.d == 3);
    CHECK(li.psi == RatMatrix::identity(3));
    const auto l1 = PolyhedralSpace::ell_1(2);
    const auto env = injective_envelope(l1);
    CHECK(env.d == 2);
    const auto target = PolyhedralSpace::ell_inf(2);
    CHECK(op_norm(env.psi, l1, target) == 1);
    CHECK(inv_norm(env.psi, l1, target) == Rational(1));
    for (const auto& x : l1.vertices()) CHECK(target.norm(env.psi * x) == l1.norm(x));
  }

  TEST_CASE("envelope factorization of random isometries into l_inf^3") {
    const auto l1 = PolyhedralSpace::ell_1(2);
    const auto env = injective_envelope(l1);
    const auto l3 = PolyhedralSpace::ell_inf(3);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
      // rows: two extreme functionals (with signs) plus a convex mix keep T isometric
      RatMatrix tm(3, 2);
      const Rational s = oracle::rnd(rng, 0, 1, 6);
      const int sg = rng() % 2 ? 1 : -1;
      tm(0, 0) = sg, tm(0, 1) = sg;
      tm(1, 0) = 1, tm(1, 1) = -1;
      tm(2, 0) = s, tm(2, 1) = s * -1 + (1 - s);
      REQUIRE(op_norm(tm, l1, l3) == 1);
      REQUIRE(inv_norm(tm, l1, l3) == Rational(1));
      const auto u = factor_through_envelope(env, l1, tm);
      REQUIRE(u.has_value());
      CHECK(*u * env.psi == tm);
      CHECK(op_norm(*u, PolyhedralSpace::ell_inf(2), l3) == 1);
    }
  }

  TEST_CASE("random rationals are reproducible") {
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 10; ++i) {
      const auto x = random_rational(a, 0, 1, 7);
      CHECK(x == random_rational(b, 0, 1, 7));
      CHECK(x >= 0);
      CHECK(x <= 1);
    }
  }
}
