#include "isolation/solver.hpp"

#include <algorithm>

#include "isolation/detectors.hpp"

namespace isolation {
namespace {

struct BudgetExceeded {};

class Search {
 public:
  Search(const Graph& g, const FamilySpec& family, std::uint64_t budget)
      : g_(g), family_(family), budget_(budget) {}

  std::optional<VertexSet> run(std::size_t limit) {
    VertexSet chosen(g_.order());
    if (descend(chosen, g_.vertices(), VertexSet(g_.order()), limit)) return chosen;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  VertexSet neighborhood_of(const VertexSet& s) const {
    VertexSet out = s;
    for (Vertex v : s) out |= g_.neighbors(v);
    return out;
  }

  // Witnesses whose closed neighbourhoods are pairwise disjoint; each needs
  // its own vertex of D. Stops once `cap` are found.
  std::size_t packing_bound(const Witness& first, const VertexSet& alive, std::size_t cap) {
    std::size_t count = 1;
    VertexSet rest = alive - neighborhood_of(neighborhood_of(first.vertices));
    while (count < cap) {
      auto w = contains_family(g_, rest, family_);
      if (!w) break;
      ++count;
      rest -= neighborhood_of(neighborhood_of(w->vertices));
    }
    return count;
  }

  bool descend(VertexSet& chosen, const VertexSet& alive, VertexSet forbidden, std::size_t remaining) {
    if (++nodes_ > budget_) throw BudgetExceeded{};
    if (remaining == 0) return !has_family_graph(g_, alive, family_);
    auto witness = contains_family(g_, alive, family_);
    if (!witness) return true;
    if (packing_bound(*witness, alive, remaining + 1) > remaining) return false;

    const VertexSet candidates = neighborhood_of(witness->vertices) - forbidden;
    for (Vertex c : candidates) {
      chosen.insert(c);
      if (descend(chosen, alive - g_.closed_neighbors(c), forbidden, remaining - 1)) return true;
      chosen.erase(c);
      forbidden.insert(c);
    }
    return false;
  }

  const Graph& g_;
  const FamilySpec& family_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// Greedy isolating set: repeatedly hit the current witness with the vertex
// of N[W] that deletes the most surviving vertices.
VertexSet greedy_isolating(const Graph& g, const FamilySpec& family) {
  VertexSet chosen(g.order());
  VertexSet alive = g.vertices();
  while (auto w = contains_family(g, alive, family)) {
    VertexSet reach = w->vertices;
    for (Vertex v : w->vertices) reach |= g.neighbors(v);
    Vertex best = reach.first();
    std::size_t best_gain = 0;
    for (Vertex c : reach) {
      const std::size_t gain = (g.closed_neighbors(c) & alive).size();
      if (gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    chosen.insert(best);
    alive -= g.closed_neighbors(best);
  }
  return chosen;
}

}  // namespace

bool is_isolating(const Graph& g, const FamilySpec& family, const VertexSet& d) {
  const VertexSet residual = g.vertices() - closed_neighborhood(g, d);
  return !has_family_graph(g, residual, family);
}

IsolationResult isolation_number(const Graph& g, const FamilySpec& family, const SolveOptions& options) {
  IsolationResult result;
  result.family = family;
  Search search(g, family, options.node_budget);
  try {
    for (std::size_t limit = 0; limit <= g.order(); ++limit) {
      if (auto found = search.run(limit)) {
        result.set = std::move(*found);
        result.size = result.set.size();
        result.nodes = search.nodes();
        return result;
      }
    }
  } catch (const BudgetExceeded&) {
    result.set = greedy_isolating(g, family);
    result.size = result.set.size();
    result.certified = Certification::UpperBoundOnly;
    result.nodes = search.nodes();
    return result;
  }
  // Unreachable: choosing every vertex empties the graph.
  throw std::logic_error("isolation search exhausted all levels");
}

std::size_t domination_number(const Graph& g) {
  const std::size_t n = g.order();
  const VertexSet all = g.vertices();
  std::vector<Vertex> pick;
  // Enumerate size-s subsets in lexicographic order.
  for (std::size_t s = 0; s <= n; ++s) {
    pick.resize(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      VertexSet covered(n);
      for (Vertex v : pick) {
        covered.insert(v);
        covered |= g.neighbors(v);
      }
      if (covered == all) return s;
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;
}

std::string_view certification_name(Certification c) {
  return c == Certification::ExactMinimum ? "exact" : "upper-bound-only";
}

}  // namespace isolation
