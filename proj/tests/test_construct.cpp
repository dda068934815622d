#include <doctest.h>

#include <algorithm>
#include <random>

#include "isolation/bounds.hpp"
#include "isolation/canonical.hpp"
#include "isolation/construct.hpp"
#include "isolation/graph_io.hpp"
#include "isolation/solver.hpp"
#include "isolation/special.hpp"
#include "oracles.hpp"

using namespace isolation;

namespace {
Graph named(NamedKind kind, std::size_t n) { return build_named({kind, n}); }

bool is_k_clique(const Graph& g, int k) { return g.order() == static_cast<std::size_t>(k) && is_complete(g); }
}  // namespace

TEST_CASE("C4 with k = 3") {
  const auto c = construct_isolating(named(NamedKind::Cycle, 4), 3, 1);
  CHECK(c.set.size() == 1);
  CHECK(is_isolating(named(NamedKind::Cycle, 4), FamilySpec::min_regular(3), c.set));
}

TEST_CASE("pure (9,3)-special graph") {
  const auto s = build_special(9, 3, 0);
  const auto c = construct_isolating(s.graph, 3, 2);
  CHECK(c.set.size() == 2);
}

TEST_CASE("P7 with k = 2") {
  const Graph p7 = named(NamedKind::Path, 7);
  const auto c = construct_isolating(p7, 2, 2);
  CHECK(c.set.size() <= 2);
  CHECK(oracle::isolation(p7, FamilySpec::clique(2)) == 2);
  CHECK(is_isolating(p7, FamilySpec::clique(2), c.set));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(construct_isolating(named(NamedKind::Complete, 4), 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_isolating(Graph(2), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_isolating(Graph(), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_isolating(named(NamedKind::Cycle, 5), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_isolating(named(NamedKind::Cycle, 5), 3, 4), std::invalid_argument);
}

TEST_CASE("F-free graphs need nothing") {
  const auto c = construct_isolating(named(NamedKind::Path, 6), 3, 3);
  CHECK(c.set.empty());
  CHECK(c.trace.steps.empty());
}

TEST_CASE("bound, isolation and replay on all connected graphs up to 7 vertices") {
  std::size_t repairs = 0;
  for (const Graph& g : enumerate_connected_up_to(7)) {
    for (int k = 1; k <= 5; ++k) {
      if (is_k_clique(g, k)) continue;
      const auto c = construct_isolating(g, k, 3);
      CHECK(c.set.size() <= bound_value(g.size(), k));
      for (int l = 1; l <= 3; ++l) CHECK(is_isolating(g, FamilySpec::indexed(l, k), c.set));
      CHECK(c.trace.replay(g.order()) == c.set);
      CHECK(c.set.size() >= isolation_number(g, FamilySpec::regular_or_chromatic(k)).size);
      repairs += c.trace.flagged() ? 1 : 0;
    }
  }
  MESSAGE("flagged constructions: " << repairs);
}

TEST_CASE("traces are deterministic") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected(11, 0.35, rng);
    const auto a = construct_isolating(g, 3, 3);
    const auto b = construct_isolating(g, 3, 3);
    CHECK(a.set == b.set);
    CHECK(a.trace.to_text() == b.trace.to_text());
  }
}

TEST_CASE("larger random graphs stay within the bound") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 12 + rng() % 7;
    const Graph g = oracle::random_connected(n, 0.2 + 0.05 * (trial % 5), rng);
    for (int k = 2; k <= 5; ++k) {
      const auto c = construct_isolating(g, k, 3);
      CHECK(c.set.size() <= bound_value(g.size(), k));
      CHECK(c.trace.replay(g.order()) == c.set);
    }
  }
}

TEST_CASE("special graphs get exactly the bound") {
  for (int k = 1; k <= 5; ++k) {
    for (std::size_t m = 1; m <= 40; ++m) {
      const auto s = build_special(m, k, m);
      if (is_k_clique(s.graph, k)) continue;
      const auto c = construct_isolating(s.graph, k, 1);
      CHECK(c.set.size() == bound_value(m, k));
    }
  }
}

TEST_CASE("every step of a recursion is recorded with its piece") {
  const Graph g = parse_graph6(write_graph6(build_special(24, 3, 9).graph));
  const auto c = construct_isolating(g, 3, 3);
  REQUIRE_FALSE(c.trace.steps.empty());
  CHECK(c.trace.steps.front().depth == 0);
  CHECK(c.trace.steps.front().subgraph == g.vertices());
  for (const auto& step : c.trace.steps) {
    CHECK(step.chosen.is_subset_of(step.subgraph));
    for (const auto& piece : step.recursed) CHECK(piece.is_subset_of(step.subgraph));
  }
  const std::string text = c.trace.to_text();
  CHECK(text.find("result=") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(c.trace.steps.size()));
}

TEST_CASE("case tags use the documented spelling") {
  CHECK(case_tag_name(CaseTag::Case1_2_C4Fix) == "Case1.2-C4fix");
  CHECK(case_tag_name(CaseTag::Case2_2_2_Fallback) == "Case2.2.2-fallback");
  CHECK(adjustment_name(Adjustment::ExactSolver) == "exact-solver");
}
