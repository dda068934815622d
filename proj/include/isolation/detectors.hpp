#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isolation/family.hpp"
#include "isolation/graph.hpp"

namespace isolation {

/// A subgraph certifying that a graph contains a member of some family.
/// `edges` is the certified subgraph's edge set; for clique and chromatic
/// witnesses it is the full induced edge set of `vertices`.
struct Witness {
  VertexSet vertices;
  std::vector<Edge> edges;
  FamilyKind certifies = FamilyKind::Clique;
};

// Every detector has two forms: one over the whole graph and one restricted
// to the induced subgraph g[alive]. The restricted forms let the solver probe
// residual graphs G - N[D] without relabelling.

/// Lexicographically least k-clique, if any. Requires k >= 1.
std::optional<Witness> contains_clique(const Graph& g, int k);
std::optional<Witness> contains_clique(const Graph& g, const VertexSet& alive, int k);

/// Exact chromatic number. 0 for the null graph.
std::size_t chromatic_number(const Graph& g);
std::size_t chromatic_number(const Graph& g, const VertexSet& alive);

/// True iff g[alive] has a proper colouring with at most `colors` colours.
bool is_colorable(const Graph& g, const VertexSet& alive, std::size_t colors);

/// A connected r-regular subgraph with r >= d (not necessarily induced), if
/// any. Smallest vertex count first, then lexicographic vertex set.
std::optional<Witness> has_regular_subgraph_min_degree(const Graph& g, int d);
std::optional<Witness> has_regular_subgraph_min_degree(const Graph& g, const VertexSet& alive,
                                                       int d);

/// A cycle found by depth-first search, if the graph is not a forest.
std::optional<Witness> has_cycle(const Graph& g);
std::optional<Witness> has_cycle(const Graph& g, const VertexSet& alive);

/// Family dispatch. For chromatic families the witness is a vertex-critical
/// k-chromatic induced subgraph.
std::optional<Witness> contains_family(const Graph& g, const FamilySpec& family);
std::optional<Witness> contains_family(const Graph& g, const VertexSet& alive,
                                       const FamilySpec& family);

/// Containment test without witness construction.
bool has_family_graph(const Graph& g, const VertexSet& alive, const FamilySpec& family);

/// Re-checks a witness against the graph and family.
bool verify_witness(const Graph& g, const Witness& w, const FamilySpec& family);

/// Vertices of g[alive] surviving iterative removal of degree < d vertices.
VertexSet peel_core(const Graph& g, const VertexSet& alive, std::size_t d);

}  // namespace isolation
