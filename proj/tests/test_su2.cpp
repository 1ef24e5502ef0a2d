#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "repchar/su2.hpp"
#include "test_util.hpp"

using namespace repchar;

namespace {

LaurentPoly u(int e) { return LaurentPoly::variable(5, e); }

LaurentPoly u_invert(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms())
    r.add_term(Monomial{m[0], m[1], m[2], m[3], -m[4]}, c);
  return r;
}

}  // namespace

TEST_CASE("su2_character") {
  CHECK(su2_character(0) == LaurentPoly::constant(1));
  CHECK(su2_character(1) == u(-1) + LaurentPoly::constant(1) + u(1));
  CHECK(evaluate_at_identity(su2_character(8)) == 17);
  CHECK_THROWS_AS(su2_character(-1), std::invalid_argument);
}

TEST_CASE("cosine_pair") {
  CHECK(cosine_pair(2) == u(2) + u(-2));
  for (int n = 1; n <= 8; ++n)
    CHECK(cosine_pair(n) == su2_character(n) - su2_character(n - 1));
  CHECK_THROWS_AS(cosine_pair(0), std::invalid_argument);
}

TEST_CASE("split_by_spin basics") {
  auto s = split_by_spin(u(1) + LaurentPoly::constant(1) + u(-1));
  REQUIRE(s.size() == 1);
  CHECK(s.at(1) == LaurentPoly::constant(1));

  s = split_by_spin(LaurentPoly::constant(2));
  REQUIRE(s.size() == 1);
  CHECK(s.at(0) == LaurentPoly::constant(2));

  CHECK(split_by_spin(LaurentPoly()).empty());
}

TEST_CASE("split_by_spin rejects asymmetric input") {
  CHECK_THROWS_AS(split_by_spin(u(1)), NotUSymmetric);
  CHECK_THROWS_AS(split_by_spin(u(-2) + LaurentPoly::constant(1)), NotUSymmetric);
}

TEST_CASE("split_by_spin round-trip on random u-symmetric input") {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    LaurentPoly p = testutil::random_poly(rng, 6);
    p = p + u_invert(p);  // u-symmetric by construction
    const auto parts = split_by_spin(p);
    LaurentPoly back;
    for (const auto& [n, coef] : parts) {
      back += su2_character(n) * coef;
      for (const auto& [m, c] : coef.terms()) CHECK(m[4] == 0);
    }
    CHECK(back == p);
  }
}

TEST_CASE("split_by_spin of a pure spin block") {
  std::mt19937 rng(19);
  for (int t = 0; t < 20; ++t) {
    const LaurentPoly q = testutil::random_nonzero_poly(rng, 4, /*allow_u=*/false);
    for (int n : {0, 3, 8}) {
      const auto parts = split_by_spin(su2_character(n) * q);
      REQUIRE(parts.size() == 1);
      CHECK(parts.at(n) == q);
    }
  }
}
