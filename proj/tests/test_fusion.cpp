#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "dormant/enumeration.hpp"
#include "dormant/errors.hpp"
#include "dormant/fusion.hpp"

using namespace dormant;

namespace {

const NTable& table(uint32_t p) {
  static std::map<uint32_t, NTable> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, enumerate_dormant_sl2(p).table).first;
  return it->second;
}

FusionRing null_ring() {
  NTable t(5);
  t.add_label(1);
  return build_ring(t);
}

}  // namespace

TEST_SUITE("fusion-ring") {
  TEST_CASE("building rings") {
    const auto ring = build_ring(table(5));
    CHECK(ring.dimension() == 3);
    CHECK(null_ring().dimension() == 2);
    CHECK(null_ring().structure(1, 1, 1) == 0);
    CHECK(null_ring().structure(0, 1, 1) == 1);
  }

  TEST_CASE("corrupted tables are rejected with a witness") {
    NTable bad = table(5);
    bad.set(1, 1, 1, bad.count(1, 1, 1) + 1);
    try {
      build_ring(bad);
      FAIL("expected NotAssociative");
    } catch (const NotAssociative& e) {
      const std::vector<int> w{e.a(), e.b(), e.c()};
      for (int l : w) CHECK((l == 1 || l == 2));
    }
    std::vector<std::vector<std::vector<int64_t>>> dense(
        2, std::vector<std::vector<int64_t>>(2, std::vector<int64_t>(2, 0)));
    dense[0][1][0] = 1;
    CHECK_THROWS_AS(build_ring({1, 2}, dense), NotCommutative);
    dense[1][0][0] = 1;
    dense[0][0][0] = -1;
    CHECK_THROWS_AS(build_ring({1, 2}, dense), PreconditionViolated);
  }

  TEST_CASE("characters") {
    const auto ring = build_ring(table(5));
    const auto chars = characters(ring);
    CHECK(chars.semisimple);
    CHECK(chars.characters.size() == table(5).labels().size() + 1);
    for (const auto& chi : chars.characters) CHECK(std::abs(chi.values[0] - 1.0) < 1e-12);

    const auto again = characters(ring);
    REQUIRE(again.characters.size() == chars.characters.size());
    for (std::size_t i = 0; i < chars.characters.size(); ++i)
      CHECK(again.characters[i].values == chars.characters[i].values);
    // Another seed finds the same set in the same order.
    const auto other = characters(ring, 99);
    for (std::size_t i = 0; i < chars.characters.size(); ++i)
      for (std::size_t j = 0; j < ring.dimension(); ++j)
        CHECK(std::abs(other.characters[i].values[j] - chars.characters[i].values[j]) < 1e-9);

    const auto nc = characters(null_ring());
    REQUIRE(nc.characters.size() == 1);
    CHECK(std::abs(nc.characters[0].values[1]) < 1e-12);
    CHECK_FALSE(nc.semisimple);
  }

  TEST_CASE("casimir") {
    for (auto c : casimir(null_ring())) CHECK(c == 0);
    const auto ring = build_ring(table(5));
    const auto cas = casimir(ring);
    CHECK(cas[0] == 0);
    CHECK(std::any_of(cas.begin(), cas.end(), [](int64_t v) { return v != 0; }));
    for (const auto& chi : characters(ring).characters) {
      std::complex<double> squares = 0.0;
      for (std::size_t i = 1; i < ring.dimension(); ++i) squares += chi.values[i] * chi.values[i];
      const auto value = evaluate(chi, cas);
      CHECK(std::abs(value - squares) < 1e-9);
      CHECK(value.real() > -1e-9);
    }
  }

  TEST_CASE("degree examples") {
    for (uint32_t p : {5u, 7u}) {
      const auto ring = build_ring(table(p));
      const auto& labels = table(p).labels();
      for (auto a : labels)
        for (auto b : labels)
          for (auto c : labels) CHECK(degree(ring, 0, 3, {a, b, c}) == table(p).count(a, b, c));
    }
    CHECK(degree(build_ring(table(7)), 2, 0, {}) == 14);
    CHECK(degree(build_ring(table(5)), 2, 0, {}) == 5);
  }

  TEST_CASE("genus-one one-point degree is a trace") {
    for (uint32_t p : {5u, 7u, 11u}) {
      const auto ring = build_ring(table(p));
      const auto& labels = table(p).labels();
      for (auto l : labels) {
        int64_t trace = 0;
        for (auto c : labels) trace += table(p).count(l, c, c);
        CHECK(degree(ring, 1, 1, {l}) == trace);
      }
    }
  }

  TEST_CASE("degree is symmetric in rho") {
    const auto ring = build_ring(table(7));
    std::vector<RadiusLabel> rho{1, 2, 3, 3};
    const auto ref = degree(ring, 0, 4, rho);
    std::sort(rho.begin(), rho.end());
    do {
      CHECK(degree(ring, 0, 4, rho) == ref);
    } while (std::next_permutation(rho.begin(), rho.end()));
  }

  TEST_CASE("degree errors") {
    const auto ring = build_ring(table(5));
    CHECK_THROWS_AS(degree(ring, 0, 2, {1, 1}), PreconditionViolated);
    CHECK_THROWS_AS(degree(ring, 1, 2, {1}), PreconditionViolated);
    CHECK_THROWS_AS(degree(ring, 1, 1, {7}), PreconditionViolated);
    CHECK_THROWS_AS(degree(null_ring(), 2, 0, {}), NonSemisimple);

    const auto chars = characters(ring);
    CharacterSet drift = chars;
    drift.characters[0].values[1] += 1e-3;
    CHECK_THROWS_AS(degree_detailed(ring, drift, 2, {}), NotNearInteger);
  }

  TEST_CASE("genus zero with a vanishing Casimir value is singular") {
    // Cas = 2 [1] + [2] for the p = 5 table, so a character with
    // chi(1) = 1, chi(2) = -2 kills it while chi(1)^3 stays nonzero.
    const auto ring = build_ring(table(5));
    REQUIRE(casimir(ring) == std::vector<int64_t>{0, 2, 1});
    CharacterSet chars = characters(ring);
    chars.characters.push_back(Character{{1.0, 1.0, -2.0}});
    CHECK_THROWS_AS(degree_detailed(ring, chars, 0, {1, 1, 1}), CasimirSingular);
  }
}
