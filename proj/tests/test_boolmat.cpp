#include <doctest.h>

#include "oracles.hpp"
#include "ramfac/boolmat.hpp"

using namespace ramfac;

TEST_SUITE("boolmat") {
  TEST_CASE("oba predicate") {
    CHECK(is_oba(BooleanMatrix::identity(3)));
    CHECK_FALSE(is_oba(BooleanMatrix::from_columns(2, {{1}, {0}})));
    CHECK(is_oba(BooleanMatrix::from_columns(3, {{0, 2}, {1}})));
  }

  TEST_CASE("columns must partition the rows") {
    CHECK_THROWS(BooleanMatrix::from_columns(3, {{0}, {1}}));
    CHECK_THROWS(BooleanMatrix::from_columns(2, {{0, 1}, {1}}));
    CHECK_THROWS(BooleanMatrix::from_columns(2, {{0, 1}, {}}));
  }

  TEST_CASE("pi") {
    CHECK(pi(BooleanMatrix::identity(3)) == Permutation::identity(3));
    const auto swap = BooleanMatrix::from_columns(2, {{1}, {0}});
    CHECK(pi(swap).values() == std::vector<std::uint32_t>{1, 0});
    for (const auto& b : enumerate_ba(4, 3)) CHECK(is_oba(b * pi(b)));
  }

  TEST_CASE("pi equivariance on M^ba_{3,2}") {
    const auto all = enumerate_ba(3, 2);
    CHECK(all.size() == 6);
    for (const auto& b : all)
      for (const auto& s : enumerate_permutations(2)) CHECK(pi(b * s) == s.inverse().compose(pi(b)));
  }

  TEST_CASE("epi and oba correspond") {
    CHECK(epi_to_boolean(RigidSurjection::identity(3)) == BooleanMatrix::identity(3));
    const RigidSurjection f({0, 1, 0}, 2);
    CHECK(epi_to_boolean(f) == BooleanMatrix::from_columns(3, {{0, 2}, {1}}));
    CHECK(boolean_to_epi(epi_to_boolean(f)) == f);
    CHECK(enumerate_oba(4, 2).size() == 7);
    CHECK_THROWS_AS(boolean_to_epi(BooleanMatrix::from_columns(2, {{1}, {0}})), DomainError);
  }
}
