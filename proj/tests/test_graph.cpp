#include <map>

#include "doctest.h"
#include "dormant/enumeration.hpp"
#include "dormant/errors.hpp"
#include "dormant/fusion.hpp"
#include "dormant/graph.hpp"

using namespace dormant;

namespace {

const NTable& table(uint32_t p) {
  static std::map<uint32_t, NTable> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, enumerate_dormant_sl2(p).table).first;
  return it->second;
}

void check_type(const DegenerationGraph& g, int genus, int r) {
  CHECK(g.genus() == genus);
  CHECK(g.leg_count() == r);
  CHECK(g.vertex_count() == static_cast<std::size_t>(2 * genus - 2 + r));
  CHECK(g.edges().size() == static_cast<std::size_t>(3 * genus - 3 + r));
  CHECK(3 * g.vertex_count() == 2 * g.edges().size() + static_cast<std::size_t>(r));
}

}  // namespace

TEST_SUITE("degen-graph") {
  TEST_CASE("canonical families") {
    const auto g03 = canonical_graphs(0, 3);
    REQUIRE(g03.size() == 1);
    CHECK(g03[0].vertex_count() == 1);
    CHECK(g03[0].edges().empty());

    const auto g11 = canonical_graphs(1, 1);
    REQUIRE(g11.size() == 1);
    CHECK(g11[0].loop_count() == 1);

    const auto g20 = canonical_graphs(2, 0);
    REQUIRE(g20.size() == 2);
    // Dumbbell: two loops and a bridge. Theta: three parallel edges.
    CHECK(g20[0].loop_count() == 2);
    CHECK(g20[1].loop_count() == 0);
    for (const auto& [a, b] : g20[1].edges())
      CHECK(DegenerationGraph::vertex_of(a) != DegenerationGraph::vertex_of(b));

    for (int genus = 0; genus <= 3; ++genus)
      for (int r = 0; r <= 4; ++r) {
        if (2 * genus - 2 + r <= 0) continue;
        const auto gs = canonical_graphs(genus, r);
        if (genus >= 2 || r >= 4 || (r >= 2 && genus >= 1)) CHECK(gs.size() >= 2);
        for (const auto& g : gs) check_type(g, genus, r);
      }
    CHECK_THROWS_AS(canonical_graphs(1, 0), PreconditionViolated);
  }

  TEST_CASE("malformed graphs are rejected") {
    CHECK_THROWS_AS(DegenerationGraph("x", 1, {{0, 1}}, {1}), PreconditionViolated);
    CHECK_THROWS_AS(DegenerationGraph("x", 1, {{0, 1}}, {}), PreconditionViolated);
    CHECK_THROWS_AS(DegenerationGraph("x", 2, {{0, 1}, {3, 4}}, {2, 5}), PreconditionViolated);
  }

  TEST_CASE("degree examples") {
    const auto& t5 = table(5);
    const auto g03 = canonical_graphs(0, 3)[0];
    for (auto a : t5.labels())
      for (auto b : t5.labels())
        for (auto c : t5.labels()) CHECK(graph_degree(g03, t5, 0, {a, b, c}) == t5.count(a, b, c));
    for (const auto& g : canonical_graphs(2, 0)) CHECK(graph_degree(g, t5, 2, {}) == 5);
  }

  TEST_CASE("agreement with the character formula and across graphs") {
    const std::vector<std::pair<int, int>> types{{0, 3}, {1, 1}, {0, 4}, {2, 0}, {1, 2}};
    for (uint32_t p : {5u, 7u}) {
      const auto& t = table(p);
      const auto ring = build_ring(t);
      const auto chars = characters(ring);
      for (auto [genus, r] : types) {
        std::vector<std::size_t> digits(static_cast<std::size_t>(r), 0);
        while (true) {
          std::vector<RadiusLabel> rho;
          for (auto d : digits) rho.push_back(t.labels()[d]);
          const auto expected = degree_detailed(ring, chars, genus, rho).value;
          for (const auto& g : canonical_graphs(genus, r))
            CHECK(graph_degree(g, t, genus, rho) == expected);
          std::size_t i = 0;
          while (i < digits.size() && ++digits[i] == t.labels().size()) digits[i++] = 0;
          if (i == digits.size()) break;
        }
      }
    }
  }

  TEST_CASE("type mismatch and complexity guard") {
    const auto& t = table(5);
    const auto theta = canonical_graphs(2, 0)[1];
    CHECK_THROWS_AS(graph_degree(theta, t, 1, {}), TypeMismatch);
    CHECK_THROWS_AS(graph_degree(theta, t, 2, {1}), TypeMismatch);
    CHECK_THROWS_AS(graph_degree(theta, t, 2, {}, 7), ComplexityRefusal);
    CHECK(graph_degree(theta, t, 2, {}, 8) == 5);
  }

  TEST_CASE("budget comes from the environment") {
    CHECK(kDefaultBudget == 100000000ULL);
    setenv("DORMANT_OPER_BUDGET", "12", 1);
    CHECK(default_budget() == 12);
    setenv("DORMANT_OPER_BUDGET", "junk", 1);
    CHECK(default_budget() == kDefaultBudget);
    unsetenv("DORMANT_OPER_BUDGET");
    CHECK(default_budget() == kDefaultBudget);
  }
}
