#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ramfac/orders.hpp"

using namespace ramfac;

TEST_SUITE("orders") {
  TEST_CASE("antilex comparison") {
    const FieldVector z{0, 0}, e0{1, 0}, e1{0, 1};
    CHECK(compare_antilex(z, e0) == std::strong_ordering::less);
    CHECK(compare_antilex(e0, e1) == std::strong_ordering::less);
    CHECK(compare_antilex(e1, e1) == std::strong_ordering::equal);
    // u_0 = e_0 directly follows zero
    const auto order = LinearOrder::field_vectors(2, 3);
    CHECK(order.label(0) == FieldVector{0, 0, 0});
    CHECK(order.label(1) == FieldVector{1, 0, 0});
    for (std::uint64_t r = 0; r < 27; ++r) CHECK(antilex_rank(antilex_unrank(r, 3, 3), 3) == r);
  }

  TEST_CASE("rigid surjection predicate") {
    const std::vector<std::uint32_t> id{0, 1, 2}, a{0, 1, 0}, b{1, 0};
    CHECK(is_rigid_surjection(id, 3));
    CHECK(is_rigid_surjection(a, 2));
    CHECK_FALSE(is_rigid_surjection(b, 2));
    CHECK_THROWS_AS(RigidSurjection({1, 0}, 2), DomainError);
  }

  TEST_CASE("Epi counts against brute force and Stirling") {
    CHECK(enumerate_epi(4, 4).size() == 1);
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        std::size_t brute = 0;
        std::vector<std::uint32_t> m(n, 0);
        while (true) {
          if (is_rigid_surjection(m, k)) ++brute;
          std::size_t i = n;
          while (i > 0 && m[i - 1] == k - 1) m[--i] = 0;
          if (i == 0) break;
          ++m[i - 1];
        }
        const auto list = enumerate_epi(n, k);
        CHECK(list.size() == brute);
        CHECK(list.size() == oracle::stirling2(n, k));
        CHECK(std::is_sorted(list.begin(), list.end()));
        CHECK(std::set<RigidSurjection>(list.begin(), list.end()).size() == list.size());
      }
    CHECK(enumerate_epi(2, 3).empty());
  }

  TEST_CASE("composition") {
    const RigidSurjection g({0, 1, 1}, 2);
    CHECK(compose_epi(g, RigidSurjection::identity(2)).map() == std::vector<std::uint32_t>{0, 1, 1});
    CHECK(compose_epi(RigidSurjection::identity(3), g) == g);
    const RigidSurjection g2({0, 1, 2, 1}, 3), f({0, 1, 1}, 2);
    CHECK(compose_epi(g2, f).map() == std::vector<std::uint32_t>{0, 1, 1, 1});
  }

  TEST_CASE("tetris") {
    CHECK(tetris(FinMap(2, {2, 0, 1})).values() == std::vector<std::uint32_t>{1, 0, 0});
    CHECK(tetris(FinMap(3, {3, 3, 3})).values() == std::vector<std::uint32_t>{2, 2, 2});
    const auto t = tetris(FinMap(1, {1, 1, 0}));
    CHECK(t.degenerate());
    CHECK(t.values() == std::vector<std::uint32_t>{0, 0, 0});
    CHECK_THROWS_AS(tetris(t), InvalidHeightError);
  }

  TEST_CASE("combinatorial spaces") {
    const std::vector<FinMap> one{FinMap(1, {1, 0})};
    CHECK(combinatorial_space(one, 1).size() == 1);
    const std::vector<FinMap> two{FinMap(1, {1, 0}), FinMap(1, {0, 1})};
    const auto s = combinatorial_space(two, 1);
    const std::set<FinMap> got(s.begin(), s.end());
    const std::set<FinMap> want{FinMap(1, {1, 0}), FinMap(1, {0, 1}), FinMap(1, {1, 1})};
    CHECK(got == want);
    const std::vector<FinMap> tall{FinMap(2, {2, 2})};
    CHECK(combinatorial_space(tall, 2) == std::vector<FinMap>{FinMap(2, {2, 2})});
    CHECK(enumerate_fin(1, 2).size() == 3);
    CHECK(enumerate_fin(2, 2).size() == 5);  // 3^2 - 2^2
  }
}
