#include "isolation/graph.hpp"

#include <algorithm>

namespace isolation {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    if (g.adj_[u].contains(v)) continue;
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
    ++g.edge_count_;
  }
  return g;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = adj_.at(v);
  s.insert(v);
  return s;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adj_) best = std::max(best, row.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = adj_[u].next(u + 1); v != VertexSet::npos; v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

VertexSet Subgraph::lift(const VertexSet& local, std::size_t parent_order) const {
  VertexSet out(parent_order);
  for (Vertex v : local) out.insert(to_parent.at(v));
  return out;
}

VertexSet Subgraph::parent_vertices(std::size_t parent_order) const {
  VertexSet out(parent_order);
  for (Vertex v : to_parent) out.insert(v);
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  require_valid(g, keep);
  Subgraph sub;
  sub.to_parent = keep.to_vector();
  std::vector<Vertex> local(g.order(), VertexSet::npos);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    const VertexSet& row = g.neighbors(sub.to_parent[i]);
    for (Vertex w = row.next(sub.to_parent[i] + 1); w != VertexSet::npos; w = row.next(w + 1))
      if (local[w] != VertexSet::npos) edges.emplace_back(i, local[w]);
  }
  sub.graph = Graph::from_edges(sub.to_parent.size(), edges);
  return sub;
}

Graph build_named(NamedGraph spec) {
  const std::size_t n = spec.order;
  if (n == 0) throw GraphError("named graphs need at least one vertex");
  std::vector<Edge> edges;
  switch (spec.kind) {
    case NamedKind::Complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case NamedKind::Path:
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case NamedKind::Cycle:
      if (n < 3) throw GraphError("a cycle needs at least 3 vertices, got " + std::to_string(n));
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      edges.emplace_back(0, n - 1);
      break;
  }
  return Graph::from_edges(n, edges);
}

void require_valid(const Graph& g, const VertexSet& x) {
  if (x.universe() == g.order()) return;
  const Vertex stray = x.next(g.order());
  if (stray != VertexSet::npos) {
    throw GraphError("invalid vertex " + std::to_string(stray) + " for a graph of order " +
                     std::to_string(g.order()));
  }
  throw GraphError("vertex set universe " + std::to_string(x.universe()) +
                   " does not match graph order " + std::to_string(g.order()));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  require_valid(g, x);
  VertexSet out = x;
  for (Vertex v : x) out |= g.neighbors(v);
  return out;
}

Subgraph remove_closed_neighborhood(const Graph& g, const VertexSet& d) {
  return induced_subgraph(g, g.vertices() - closed_neighborhood(g, d));
}

std::vector<VertexSet> component_sets(const Graph& g, const VertexSet& alive) {
  std::vector<VertexSet> out;
  VertexSet unseen = alive;
  for (Vertex root = unseen.first(); root != VertexSet::npos; root = unseen.first()) {
    VertexSet comp(g.order());
    comp.insert(root);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet grown(g.order());
      for (Vertex v : frontier) grown |= g.neighbors(v);
      grown &= alive;
      grown -= comp;
      comp |= grown;
      frontier = std::move(grown);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Subgraph> connected_components(const Graph& g) {
  std::vector<Subgraph> out;
  for (const auto& comp : component_sets(g, g.vertices())) out.push_back(induced_subgraph(g, comp));
  return out;
}

bool is_connected(const Graph& g) { return component_sets(g, g.vertices()).size() <= 1; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), edges);
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_cycle_of_length(const Graph& g, std::size_t length) {
  if (length < 3 || g.order() != length || g.size() != length) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

}  // namespace isolation
