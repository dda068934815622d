#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "isolation/canonical.hpp"
#include "isolation/graph_io.hpp"
#include "oracles.hpp"

using namespace isolation;

TEST_CASE("class counts for all graphs") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
}

TEST_CASE("class counts for connected graphs") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(enumerate_connected(n).size() == expected[n - 1]);
  CHECK(enumerate_connected_up_to(7).size() == 996);
  CHECK_THROWS_AS(enumerate_connected(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_connected(9), std::out_of_range);
}

TEST_CASE("the three connected graphs on three vertices") {
  const auto g = enumerate_connected(3);
  REQUIRE(g.size() == 2);
  std::set<std::size_t> sizes{g[0].size(), g[1].size()};
  CHECK(sizes == std::set<std::size_t>{2, 3});
}

TEST_CASE("canonical keys ignore labelling") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 11;
    const Graph g = oracle::random_graph(n, 0.45, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    const Graph h = Graph::from_edges(n, edges);
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(canonical_form(g).size() == g.size());
  }
}

TEST_CASE("non-isomorphic graphs get different keys") {
  const Graph c6 = build_named({NamedKind::Cycle, 6});
  const Graph two_triangles = disjoint_union(build_named({NamedKind::Complete, 3}), build_named({NamedKind::Complete, 3}));
  CHECK(canonical_key(c6) != canonical_key(two_triangles));
}

TEST_CASE("enumeration output is sorted by key and duplicate free") {
  const auto graphs = enumerate_graphs(6);
  std::vector<std::string> keys;
  for (const auto& g : graphs) keys.push_back(write_graph6(g));
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  for (const auto& g : graphs) CHECK(canonical_key(g) == write_graph6(g));
}
