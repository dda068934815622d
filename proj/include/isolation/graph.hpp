#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isolation/vertex_set.hpp"

namespace isolation {

using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on the vertices 0..n-1.
///
/// Immutable once built. Adjacency is kept as one VertexSet per vertex, so
/// neighbourhood unions and intersections are word-parallel.
class Graph {
 public:
  /// The null graph (no vertices).
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Duplicate edges collapse; loops and
  /// out-of-range endpoints throw GraphError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  VertexSet closed_neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  std::size_t max_degree() const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// A graph carved out of a parent graph, with the map back to the parent's
/// vertex labels. `to_parent[i]` is the parent label of local vertex i.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  /// Maps a set of local vertices to parent labels.
  VertexSet lift(const VertexSet& local, std::size_t parent_order) const;
  /// Parent labels of every local vertex.
  VertexSet parent_vertices(std::size_t parent_order) const;
};

/// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in increasing order.
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

enum class NamedKind { Complete, Path, Cycle };

struct NamedGraph {
  NamedKind kind;
  std::size_t order;
};

/// K_n, P_n or C_n on 0..n-1 (path and cycle in index order).
Graph build_named(NamedGraph spec);

/// X together with every neighbour of a member of X.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

/// G - N[D], relabelled, with the map back to the labels of g.
Subgraph remove_closed_neighborhood(const Graph& g, const VertexSet& d);

/// Connected components ordered by smallest original vertex.
std::vector<Subgraph> connected_components(const Graph& g);

/// Vertex sets of the components of g[alive], ordered by smallest vertex.
std::vector<VertexSet> component_sets(const Graph& g, const VertexSet& alive);

bool is_connected(const Graph& g);

/// Checks that every member of x is a vertex of g.
void require_valid(const Graph& g, const VertexSet& x);

/// Disjoint union, with the vertices of b shifted past those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_complete(const Graph& g);
/// True iff g is a cycle on exactly `length` vertices.
bool is_cycle_of_length(const Graph& g, std::size_t length);

}  // namespace isolation
