#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

/// One clique constituent: a k-clique `clique` plus the pendant edge from
/// `attachment` (a member of the clique) to the connection vertex.
struct Constituent {
  Vertex connection = 0;
  Vertex attachment = 0;
  VertexSet clique;
};

/// Decomposition of an (m, k)-special graph.
///
/// m + 1 = q * t_k + r with 0 <= r < t_k. The q clique constituents hang off
/// connection vertices joined by the quotient tree; the remainder tree has r
/// edges and meets the constituents only in the last connection vertex.
struct SpecialGraphDescriptor {
  int k = 1;
  std::size_t m = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  std::vector<Edge> quotient_tree;
  std::vector<Edge> remainder_tree;
  std::vector<Constituent> constituents;

  bool pure() const { return r == 0; }
};

/// Builds an (m, k)-special graph. Trees are uniform labelled trees drawn
/// from `tree_seed` via Prüfer sequences; seed 0 gives paths.
///
/// Labelling: constituent i occupies vertices i*(k+1) .. i*(k+1)+k with the
/// connection vertex first and the attachment vertex second; remainder tree
/// vertices follow. When q = 0 the graph is an m-edge tree.
struct SpecialGraph {
  Graph graph;
  SpecialGraphDescriptor descriptor;
};
SpecialGraph build_special(std::size_t m, int k, std::uint64_t tree_seed);

/// Decomposes g as a pure (m, k)-special graph if it is one. When several
/// decompositions exist, returns the one whose sorted constituent vertex
/// sets are lexicographically least.
std::optional<SpecialGraphDescriptor> recognize_pure_special(const Graph& g, int k);

/// The isolation number that the edge bound predicts for a special graph.
std::size_t predicted_isolation(const SpecialGraphDescriptor& d);

/// Structured text record (one field per line).
std::string describe(const SpecialGraphDescriptor& d);

/// Uniform labelled tree on `order` vertices; seed 0 gives the path 0-1-..
std::vector<Edge> random_tree(std::size_t order, std::uint64_t seed);

}  // namespace isolation
