#include <doctest.h>

#include "ramfac/bounds.hpp"
#include "ramfac/json_io.hpp"

using namespace ramfac;

TEST_SUITE("bounds") {
  TEST_CASE("n_infty") {
    CHECK(bound_n_infty(1, 2, 2, 1).to_string() == "GR(5,20,2)");
    // m = d: the falling factorial is d!
    const auto b = bound_n_infty(2, 2, 3, 1);
    CHECK(b.d == 25);
    CHECK(b.m == BigInt(25 * 4 * 2));
    CHECK(b.r == 3);
    CHECK(bound_n_infty(1, 1, 2, Rational(1, 2)).d == 9);
    CHECK_THROWS_AS(bound_n_infty(3, 2, 2, 1), DomainError);
    CHECK_THROWS_AS(bound_n_infty(1, 2, 2, 0), DomainError);
  }

  TEST_CASE("dim H") {
    const auto a = bound_dim_h(1, 1, 1, 7);
    CHECK(a.base == 49);
    REQUIRE(a.value.has_value());
    CHECK(*a.value == 7);
    CHECK(a.npol_d == 13);
    CHECK(a.npol_m == 650);
    const auto b = bound_dim_h(2, 1, 1, 1);
    REQUIRE(b.value.has_value());
    CHECK(*b.value == boost::multiprecision::pow(BigInt(2), 2401));
    const auto c = bound_dim_h(2, 2, 1, 5, 1 << 10);
    CHECK_FALSE(c.value.has_value());
    CHECK(c.expression == "2^(49^10) * 2^(49^10) * 5");
  }
}

TEST_SUITE("json_io") {
  TEST_CASE("rationals and spaces round-trip") {
    CHECK(rational_from_json(to_json(Rational(-3, 4)), "q") == Rational(-3, 4));
    CHECK(rational_from_json(Json(5), "q") == 5);
    CHECK_THROWS_AS(rational_from_json(Json("1/0"), "q"), ParseError);
    const auto s = PolyhedralSpace::ell_1(3);
    const auto back = space_from_json(to_json(s));
    CHECK(back.functionals() == s.functionals());
    CHECK(back.vertices() == s.vertices());
  }

  TEST_CASE("space JSON diagnostics") {
    try {
      space_from_json(Json::parse(R"({"dim": 2, "functionals": [["1", "0"], ["x"]]})"));
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("space.functionals[1][0]") != std::string::npos);
    }
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"dim": 2, "functionals": [["1", "0", "0"]]})")), ParseError);
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"dim": 2})")), ParseError);
    const auto j = Json::parse(R"({"dim": 2, "functionals": [["1","0"],["0","1"]], "vertices": [["1","0"],["0","1"]]})");
    CHECK_THROWS_AS(space_from_json(j), ParseError);
  }

  TEST_CASE("metrics") {
    const auto m = metric_from_json(Json::parse(R"({"n": 2, "d": [["0","1/2"],["1/2","0"]], "basepoint": 1})"));
    CHECK(m.basepoint() == 1);
    CHECK(m.d(0, 1) == Rational(1, 2));
    const auto c = metric_from_csv("# pts\n0,1,2\n1,0,1\n2,1,0\n");
    CHECK(c.size() == 3);
    CHECK(metric_from_csv("0,1;1,0").size() == 2);
    CHECK_THROWS_AS(metric_from_csv("0,1\n1,zz\n"), ParseError);
    CHECK_THROWS_AS(metric_from_json(Json::parse(R"({"n": 3, "d": [["0"]]})")), ParseError);
  }

  TEST_CASE("matrix text forms") {
    CHECK(parse_int_rows("11,01,10") == std::vector<std::vector<long>>{{1, 1}, {0, 1}, {1, 0}});
    CHECK(parse_int_rows("11\n01\n") == std::vector<std::vector<long>>{{1, 1}, {0, 1}});
    CHECK(parse_int_rows("1 12;3 4") == std::vector<std::vector<long>>{{1, 12}, {3, 4}});
    CHECK_THROWS_AS(parse_int_rows("11,0"), ParseError);
    CHECK(parse_rational_rows("1 -1/2; 0 3") == std::vector<RatVec>{{1, Rational(-1, 2)}, {0, 3}});
    const auto m = PrimeFieldMatrix::from_rows(3, {{1, 2}, {0, 1}});
    CHECK(ffmatrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(ffmatrix_from_json(Json::parse(R"({"p":2,"rows":1,"cols":2,"entries":[[1]]})")), ParseError);
  }
}
