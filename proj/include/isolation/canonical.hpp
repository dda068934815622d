#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

/// Canonical relabelling: isomorphic graphs map to identical graphs.
///
/// The canonical graph maximises the graph6 upper-triangle bit string over
/// all labellings compatible with an iterated degree refinement. The search
/// is exact and exponential in the worst case; it is meant for desk-scale
/// graphs (n <= ~12).
Graph canonical_form(const Graph& g);

/// graph6 of the canonical form.
std::string canonical_key(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n
/// vertices, connected or not, sorted by canonical graph6. 0 <= n <= 9.
std::vector<Graph> enumerate_graphs(std::size_t n);

/// Connected classes only. 1 <= n <= 8.
std::vector<Graph> enumerate_connected(std::size_t n);

/// Connected classes for every order 1..max_n, in order of n.
std::vector<Graph> enumerate_connected_up_to(std::size_t max_n);

}  // namespace isolation
