#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "isolation/bounds.hpp"
#include "isolation/detectors.hpp"
#include "isolation/graph_io.hpp"
#include "isolation/solver.hpp"
#include "isolation/special.hpp"
#include "oracles.hpp"

using namespace isolation;

TEST_CASE("t_k and the bound") {
  CHECK(t_k(1) == 2);
  CHECK(t_k(3) == 5);
  CHECK(t_k(5) == 12);
  CHECK_THROWS_AS(t_k(0), std::invalid_argument);
  CHECK(bound_value(71, 5) == 6);
  CHECK(bound_value(4, 3) == 1);
  CHECK(bound_value(9, 3) == 2);
  CHECK(attains_bound(2, 9, 3));
  CHECK_FALSE(attains_bound(1, 9, 3));
}

TEST_CASE("pure (9,3)-special graph from path trees") {
  const auto s = build_special(9, 3, 0);
  const auto& d = s.descriptor;
  CHECK(d.pure());
  CHECK(d.q == 2);
  CHECK(d.r == 0);
  CHECK(s.graph.order() == 8);
  CHECK(s.graph.size() == 9);
  REQUIRE(d.constituents.size() == 2);
  for (const auto& c : d.constituents) {
    CHECK(c.clique.size() == 3);
    CHECK(s.graph.adjacent(c.connection, c.attachment));
    CHECK(c.clique.contains(c.attachment));
    CHECK(s.graph.degree(c.attachment) == 3);
  }
  CHECK(d.quotient_tree == std::vector<Edge>{{0, 4}});
}

TEST_CASE("the 36-vertex instance with k = 5") {
  const auto s = build_special(71, 5, 0);
  CHECK(s.descriptor.pure());
  CHECK(s.descriptor.q == 6);
  CHECK(s.graph.order() == 36);
  CHECK(s.graph.size() == 71);
  CHECK(is_connected(s.graph));
}

TEST_CASE("non-pure builds carry a remainder tree at the last connection") {
  const auto s = build_special(12, 3, 7);
  const auto& d = s.descriptor;
  CHECK(d.q == 2);
  CHECK(d.r == 3);
  CHECK(d.remainder_tree.size() == 3);
  CHECK(s.graph.size() == 12);
  CHECK(s.graph.order() == 2 * 4 + 3);
  const Vertex last = d.constituents.back().connection;
  VertexSet touched(s.graph.order());
  for (auto [u, v] : d.remainder_tree) {
    touched.insert(u);
    touched.insert(v);
  }
  CHECK(touched.contains(last));
  for (const auto& c : d.constituents) CHECK((touched & c.clique).empty());
  CHECK(is_connected(s.graph));
  CHECK_FALSE(recognize_pure_special(s.graph, 3));
}

TEST_CASE("q = 0 gives an m-edge tree") {
  const auto s = build_special(2, 3, 0);
  CHECK(s.descriptor.q == 0);
  CHECK(s.graph.size() == 2);
  CHECK(s.graph.order() == 3);
  CHECK(is_connected(s.graph));
  CHECK(isolation_number(s.graph, FamilySpec::regular_or_chromatic(3)).size == 0);
}

TEST_CASE("builds are deterministic in the seed") {
  CHECK(build_special(29, 4, 5).graph == build_special(29, 4, 5).graph);
  CHECK(describe(build_special(29, 4, 5).descriptor) == describe(build_special(29, 4, 5).descriptor));
}

TEST_CASE("recognition") {
  const auto k4_pendant = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const auto d = recognize_pure_special(k4_pendant, 4);
  REQUIRE(d);
  CHECK(d->q == 1);
  CHECK(d->constituents[0].connection == 4);
  CHECK(d->constituents[0].attachment == 3);

  CHECK_FALSE(recognize_pure_special(build_named({NamedKind::Cycle, 4}), 3));
  CHECK_FALSE(recognize_pure_special(build_named({NamedKind::Cycle, 5}), 2));
  CHECK(recognize_pure_special(build_named({NamedKind::Path, 2}), 1));
}

TEST_CASE("recognition round-trips through relabelling") {
  std::mt19937_64 rng(53);
  for (int k = 1; k <= 5; ++k) {
    for (std::size_t q = 1; q <= 4; ++q) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto s = build_special(q * t_k(k) - 1, k, seed);
        std::vector<Vertex> perm(s.graph.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (auto [u, v] : s.graph.edges()) edges.emplace_back(perm[u], perm[v]);
        const Graph shuffled = Graph::from_edges(s.graph.order(), edges);
        const auto d = recognize_pure_special(shuffled, k);
        REQUIRE(d);
        CHECK(d->q == q);
        CHECK(d->quotient_tree.size() == q - 1);
      }
    }
  }
}

TEST_CASE("predicted values match brute force on small builds") {
  for (int k = 1; k <= 4; ++k) {
    for (std::size_t m = 0; m <= 13; ++m) {
      const auto s = build_special(m, k, m + 1);
      if (s.graph.order() > 12) continue;
      if (s.graph.order() == static_cast<std::size_t>(k) && is_complete(s.graph)) continue;
      for (int l = 1; l <= 3; ++l)
        CHECK(oracle::isolation(s.graph, FamilySpec::indexed(l, k)) == predicted_isolation(s.descriptor));
    }
  }
}

TEST_CASE("random trees") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto edges = random_tree(9, seed);
    CHECK(edges.size() == 8);
    CHECK(is_connected(Graph::from_edges(9, edges)));
  }
  CHECK(random_tree(4, 0) == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(random_tree(1, 3).empty());
}
