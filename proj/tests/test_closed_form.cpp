#include <tuple>

#include "doctest.h"
#include "dormant/closed_form.hpp"
#include "dormant/errors.hpp"

using namespace dormant;

TEST_SUITE("closed-form") {
  TEST_CASE("genus two is the cubic p(p^2 - 1)/24") {
    for (int64_t p : {5, 7, 11, 13}) {
      const auto r = verlinde_sl2(static_cast<uint32_t>(p), 2, 0);
      CHECK(r.value == p * (p * p - 1) / 24);
      CHECK(r.residual < 1e-6);
      CHECK(r.terms == static_cast<uint64_t>(p - 1));
    }
  }

  TEST_CASE("positive integers over the tested range") {
    for (uint32_t p : {5u, 7u, 11u, 13u})
      for (int g = 0; g <= 3; ++g)
        for (int r = 0; r <= 4; ++r) {
          if (2 * g - 2 + r <= 0) continue;
          const auto v = verlinde_sl2(p, g, r);
          CHECK(v.value > 0);
          CHECK(v.residual < 1e-6);
        }
  }

  TEST_CASE("Joshi sum for n = 2 matches the trigonometric sum") {
    for (uint32_t p : {5u, 7u})
      for (int g : {2, 3}) CHECK(joshi_sln(p, 2, g).value == verlinde_sl2(p, g, 0).value);
    CHECK(joshi_sln(5, 2, 2).value == 5);
  }

  TEST_CASE("unordered and ordered Joshi sums agree") {
    for (auto [p, n, g] : {std::tuple{7u, 3, 2}, std::tuple{11u, 3, 2}, std::tuple{11u, 4, 2},
                           std::tuple{7u, 2, 4}}) {
      const auto a = joshi_sln(p, n, g, false);
      const auto b = joshi_sln(p, n, g, true);
      CHECK(a.value == b.value);
      CHECK(b.terms > a.terms);
    }
  }

  TEST_CASE("hypotheses and budget") {
    CHECK_THROWS_AS(joshi_sln(5, 3, 2), PreconditionViolated);
    CHECK_THROWS_AS(joshi_sln(7, 2, 1), PreconditionViolated);
    CHECK_THROWS_AS(joshi_sln(11, 4, 2, false, 1000), ComplexityRefusal);
    CHECK_THROWS_AS(verlinde_sl2(9, 2, 0), PreconditionViolated);
    CHECK_THROWS_AS(verlinde_sl2(5, 1, 0), PreconditionViolated);
  }
}
