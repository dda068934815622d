#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "isolation/family.hpp"
#include "isolation/graph.hpp"

namespace isolation {

enum class Certification { ExactMinimum, UpperBoundOnly };

struct IsolationResult {
  std::size_t size = 0;
  VertexSet set;
  FamilySpec family;
  Certification certified = Certification::ExactMinimum;
  std::uint64_t nodes = 0;
};

struct SolveOptions {
  /// Branch nodes before the search gives up and falls back to a greedy set.
  std::uint64_t node_budget = 10'000'000;
};

/// True iff G - N[D] contains no graph of the family.
bool is_isolating(const Graph& g, const FamilySpec& family, const VertexSet& d);

/// Smallest isolating set, searched level by level (|D| = 0, 1, 2, ...).
///
/// At each node the residual graph's witness W is found and the search
/// branches on N[V(W)], which every isolating extension must meet. Earlier
/// siblings are excluded from later branches, and a packing of witnesses
/// with pairwise disjoint closed neighbourhoods prunes levels that cannot
/// succeed. The returned set is the first found under ascending branch order.
IsolationResult isolation_number(const Graph& g, const FamilySpec& family,
                                 const SolveOptions& options = {});

/// Domination number by plain subset enumeration. Shares no code with the
/// isolation search so the two can cross-check each other.
std::size_t domination_number(const Graph& g);

std::string_view certification_name(Certification c);

}  // namespace isolation
