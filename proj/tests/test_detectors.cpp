#include <doctest.h>

#include "isolation/canonical.hpp"
#include "isolation/detectors.hpp"
#include "isolation/special.hpp"
#include "oracles.hpp"

using namespace isolation;

namespace {
Graph named(NamedKind kind, std::size_t n) { return build_named({kind, n}); }
oracle::Mask all(const Graph& g) { return static_cast<oracle::Mask>((std::uint64_t{1} << g.order()) - 1); }

Graph k4_minus_edge() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return Graph::from_edges(4, e);
}

std::vector<Graph> graphs_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i <= n; ++i)
    for (auto& g : enumerate_graphs(i)) out.push_back(std::move(g));
  return out;
}
}  // namespace

TEST_CASE("clique detection") {
  const auto k4 = contains_clique(named(NamedKind::Complete, 4), 4);
  REQUIRE(k4);
  CHECK(k4->vertices == VertexSet::full(4));
  CHECK_FALSE(contains_clique(named(NamedKind::Cycle, 5), 3));

  const auto special = build_special(9, 3, 0);
  const auto tri = contains_clique(special.graph, 3);
  REQUIRE(tri);
  bool is_constituent = false;
  for (const auto& c : special.descriptor.constituents) is_constituent = is_constituent || c.clique == tri->vertices;
  CHECK(is_constituent);
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(named(NamedKind::Complete, 4)) == 4);
  CHECK(chromatic_number(named(NamedKind::Cycle, 5)) == 3);
  CHECK(chromatic_number(named(NamedKind::Cycle, 4)) == 2);
  CHECK(chromatic_number(Graph()) == 0);
  CHECK(chromatic_number(Graph(3)) == 1);
}

TEST_CASE("regular subgraphs") {
  const Graph c4 = named(NamedKind::Cycle, 4);
  const auto w = has_regular_subgraph_min_degree(c4, 2);
  REQUIRE(w);
  CHECK(w->vertices == VertexSet::full(4));
  CHECK_FALSE(has_regular_subgraph_min_degree(named(NamedKind::Path, 7), 2));
  CHECK_FALSE(has_regular_subgraph_min_degree(k4_minus_edge(), 3));
  const auto w2 = has_regular_subgraph_min_degree(k4_minus_edge(), 2);
  REQUIRE(w2);
  CHECK(verify_witness(k4_minus_edge(), *w2, FamilySpec::min_regular(3)));
  CHECK(w2->vertices.size() == 3);
}

TEST_CASE("cycles") {
  CHECK_FALSE(has_cycle(named(NamedKind::Path, 5)));
  const auto c3 = has_cycle(named(NamedKind::Complete, 3));
  REQUIRE(c3);
  CHECK(c3->vertices == VertexSet::full(3));
  const auto special = build_special(14, 3, 0);
  const auto w = has_cycle(special.graph);
  REQUIRE(w);
  bool is_constituent = false;
  for (const auto& c : special.descriptor.constituents) is_constituent = is_constituent || c.clique == w->vertices;
  CHECK(is_constituent);
}

TEST_CASE("family dispatch on C4") {
  const Graph c4 = named(NamedKind::Cycle, 4);
  CHECK(contains_family(c4, FamilySpec::min_regular(3)));
  CHECK_FALSE(contains_family(c4, FamilySpec::chromatic_at_least(3)));
  CHECK(contains_family(Graph(1), FamilySpec::chromatic_at_least(1)));
  CHECK_FALSE(contains_family(Graph(), FamilySpec::chromatic_at_least(1)));
}

TEST_CASE("detectors agree with brute force on all graphs up to 6 vertices") {
  for (const Graph& g : graphs_up_to(6)) {
    const auto adj = oracle::adjacency(g);
    for (int d = 0; d <= 4; ++d) {
      const auto w = has_regular_subgraph_min_degree(g, d);
      CHECK(w.has_value() == oracle::has_regular(adj, all(g), d));
      if (w) CHECK(verify_witness(g, *w, FamilySpec::min_regular(d + 1)));
    }
    CHECK(chromatic_number(g) == static_cast<std::size_t>(oracle::chromatic(adj, all(g))));
    for (int k = 1; k <= 5; ++k) {
      const auto c = contains_clique(g, k);
      CHECK(c.has_value() == oracle::has_clique(adj, all(g), k));
      if (c) CHECK(verify_witness(g, *c, FamilySpec::clique(k)));
      const auto chrom = contains_family(g, FamilySpec::chromatic_at_least(k));
      if (chrom) CHECK(verify_witness(g, *chrom, FamilySpec::chromatic_at_least(k)));
    }
  }
}

TEST_CASE("restricted detectors see only the alive vertices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(8, 0.5, rng);
    const auto adj = oracle::adjacency(g);
    const auto mask = static_cast<oracle::Mask>(rng() & 0xFF);
    VertexSet alive(8);
    for (Vertex v = 0; v < 8; ++v)
      if ((mask >> v) & 1U) alive.insert(v);
    for (int k = 1; k <= 4; ++k) {
      for (auto f : {FamilySpec::clique(k), FamilySpec::min_regular(k), FamilySpec::chromatic_at_least(k),
                     FamilySpec::regular_or_chromatic(k)}) {
        const bool expect = oracle::contains(adj, mask, f);
        CHECK(has_family_graph(g, alive, f) == expect);
        const auto w = contains_family(g, alive, f);
        CHECK(w.has_value() == expect);
        if (w) CHECK(w->vertices.is_subset_of(alive));
      }
    }
    CHECK(has_family_graph(g, alive, FamilySpec::cycles()) == oracle::has_cycle(adj, mask));
  }
}

TEST_CASE("cycle containment is 2-regular containment, on all graphs up to 8 vertices") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(has_cycle(g).has_value() == has_regular_subgraph_min_degree(g, 2).has_value());
    }
  }
}

TEST_CASE("small-degree regular families") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng() % 7, 0.3, rng);
    CHECK(contains_family(g, FamilySpec::min_regular(2)).has_value() == (g.size() >= 1));
    CHECK(contains_family(g, FamilySpec::min_regular(1)).has_value() == (g.order() >= 1));
  }
}

TEST_CASE("3-chromatic means not bipartite") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(9, 0.25, rng);
    const auto adj = oracle::adjacency(g);
    CHECK(contains_family(g, FamilySpec::chromatic_at_least(3)).has_value() ==
          !oracle::colorable(adj, all(g), 2));
  }
}

TEST_CASE("peeling to a core") {
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  CHECK(peel_core(g, g.vertices(), 2) == VertexSet(5, {0, 1, 2}));
  CHECK(peel_core(g, g.vertices(), 3).empty());
}
