#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ramfac/ffmat.hpp"

using namespace ramfac;

namespace {

PrimeFieldMatrix mat(std::uint32_t p, std::vector<std::vector<long>> rows) { return PrimeFieldMatrix::from_rows(p, rows); }

PrimeFieldMatrix square(std::uint32_t p, std::size_t k, const std::vector<std::uint32_t>& e) {
  PrimeFieldMatrix m(p, k, k);
  for (std::size_t i = 0; i < k * k; ++i) m.set(i / k, i % k, e[i]);
  return m;
}

}  // namespace

TEST_SUITE("ffmat") {
  TEST_CASE("construction rejects composite moduli") {
    CHECK_THROWS_AS(PrimeFieldMatrix(4, 2, 2), DomainError);
    CHECK(mat(3, {{-1, 4}}).row(0) == std::vector<std::uint32_t>{2, 1});
  }

  TEST_CASE("rref examples") {
    CHECK(rref(PrimeFieldMatrix::identity(2, 3)) == PrimeFieldMatrix::identity(2, 3));
    CHECK(rref(mat(2, {{0, 1}, {1, 0}})) == PrimeFieldMatrix::identity(2, 2));
    CHECK(rref(mat(2, {{1, 1, 0}, {1, 1, 1}})) == mat(2, {{1, 1, 0}, {0, 0, 1}}));
    CHECK(is_rref(mat(2, {{1, 1, 0}, {0, 0, 1}})));
    CHECK_FALSE(is_rref(mat(2, {{1, 1}, {0, 1}})));
  }

  TEST_CASE("rcef decomposition of the F_2 example is the unique GL solution") {
    const auto a = mat(2, {{1, 1}, {0, 1}, {1, 0}});
    const auto d = rcef_decompose(a);
    CHECK(is_rcef(d.red));
    CHECK(a * d.tau.matrix() == d.red);
    std::size_t solutions = 0;
    for (const auto& g : oracle::gl_brute(2, 2))
      if (is_rcef(a * square(2, 2, g))) {
        ++solutions;
        CHECK(square(2, 2, g) == d.tau.matrix());
      }
    CHECK(solutions == 1);
    const auto id = rcef_decompose(d.red);
    CHECK(id.red == d.red);
    CHECK(id.tau.matrix() == PrimeFieldMatrix::identity(2, 2));
  }

  TEST_CASE("equivariance over all rank-2 3x2 matrices over F_2") {
    const auto gl = oracle::gl_brute(2, 2);
    for (const auto& a : enumerate_full_rank(2, 3, 2)) {
      const auto d = rcef_decompose(a);
      for (const auto& ge : gl) {
        const GLElement g(square(2, 2, ge));
        const auto d2 = rcef_decompose(a * g.matrix());
        CHECK(d2.red == d.red);
        CHECK(d2.tau.matrix() == g.inverse() * d.tau.matrix());
      }
    }
  }

  TEST_CASE("rank errors") {
    CHECK_THROWS_AS(rcef_decompose(mat(2, {{1, 1}, {1, 1}})), RankError);
    CHECK_THROWS_AS(GLElement(mat(2, {{1, 1}, {1, 1}})), RankError);
  }

  TEST_CASE("tau2") {
    const auto id = tau2(PrimeFieldMatrix::identity(3, 2));
    CHECK(id.gamma.matrix() == PrimeFieldMatrix::identity(3, 2));
    CHECK(id.a0 == PrimeFieldMatrix::identity(3, 2));
    const auto ones = tau2(mat(2, {{1, 1}, {1, 1}}));
    CHECK(ones.a0 == mat(2, {{1}, {1}}));
    CHECK(ones.a1 == mat(2, {{1}, {1}}));
    CHECK(ones.gamma.matrix() == PrimeFieldMatrix::identity(2, 1));
  }

  TEST_CASE("tau2 uniqueness over all rank-2 3x3 matrices over F_2") {
    const auto gl = oracle::gl_brute(2, 2);
    const auto reps = enumerate_grassmannian(2, 2, 3);
    std::size_t checked = 0;
    std::vector<std::uint32_t> e(9, 0);
    for (std::uint32_t code = 0; code < 512; ++code) {
      for (std::size_t i = 0; i < 9; ++i) e[i] = (code >> i) & 1u;
      const auto a = square(2, 3, e);
      if (a.rank() != 2) continue;
      ++checked;
      const auto t = tau2(a);
      CHECK(t.a0 * t.gamma.matrix() * t.a1.transpose() == a);
      std::size_t hits = 0;
      for (const auto& r0 : reps)
        for (const auto& r1 : reps)
          for (const auto& g : gl)
            if (r0 * square(2, 2, g) * r1.transpose() == a) ++hits;
      CHECK(hits == 1);
    }
    CHECK(checked == 294);  // 7 * 7 * 6
  }

  TEST_CASE("phi") {
    const auto f2 = LinearOrder::field_vectors(2, 1);
    CHECK(phi(RigidSurjection({0, 1}, 2), f2) == mat(2, {{0}, {1}}));
    for (std::size_t n = 2; n <= 5; ++n)
      for (const auto& f : enumerate_epi(n, LinearOrder::field_vectors(2, 2))) {
        const auto a = phi(f, LinearOrder::field_vectors(2, 2)).transpose();
        CHECK(rref(a) == a);
      }
    const auto f3 = LinearOrder::field_vectors(3, 1);
    for (const auto& f : enumerate_epi(4, f3)) CHECK(is_rref(phi(f, f3).transpose()));
  }

  TEST_CASE("characterization examples") {
    const auto c = rref_characterization(PrimeFieldMatrix::identity(2, 2));
    CHECK(c.is_rref);
    CHECK(c.rigid_with_units);
    const auto d = rref_characterization(mat(2, {{1, 1}, {0, 1}}));
    CHECK_FALSE(d.is_rref);
    CHECK_FALSE(d.rigid_with_units);
  }

  TEST_CASE("grassmannian and GL counts") {
    CHECK(enumerate_grassmannian(2, 1, 3).size() == 7);
    CHECK(enumerate_grassmannian(2, 2, 4).size() == 35);
    CHECK(enumerate_grassmannian(3, 3, 3).size() == 1);
    CHECK(gl_order(2, 1) == 1);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(3, 2) == 48);
    CHECK(oracle::gl_brute(3, 2).size() == 48);
    for (std::uint32_t p : {2u, 3u})
      for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(gaussian_binomial(p, n, k) == oracle::q_binomial(p, n, k));
  }
}
