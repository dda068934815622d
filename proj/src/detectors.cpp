#include "isolation/detectors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace isolation {
namespace {

std::vector<Edge> induced_edges(const Graph& g, const VertexSet& s) {
  std::vector<Edge> out;
  for (Vertex u : s) {
    const VertexSet row = g.neighbors(u) & s;
    for (Vertex v = row.next(u + 1); v != VertexSet::npos; v = row.next(v + 1)) out.emplace_back(u, v);
  }
  return out;
}

Witness make_witness(const Graph& g, VertexSet vertices, FamilyKind kind) {
  auto edges = induced_edges(g, vertices);
  return Witness{std::move(vertices), std::move(edges), kind};
}

std::optional<Witness> any_vertex(const Graph& g, const VertexSet& alive, FamilyKind kind) {
  const Vertex v = alive.first();
  if (v == VertexSet::npos) return std::nullopt;
  return Witness{VertexSet(g.order(), {v}), {}, kind};
}

std::optional<Witness> any_edge(const Graph& g, const VertexSet& alive, FamilyKind kind) {
  for (Vertex u : alive) {
    const Vertex v = (g.neighbors(u) & alive).next(u + 1);
    if (v != VertexSet::npos) return Witness{VertexSet(g.order(), {u, v}), {{u, v}}, kind};
  }
  return std::nullopt;
}

bool clique_search(const Graph& g, VertexSet candidates, std::size_t k, std::vector<Vertex>& chosen) {
  if (chosen.size() == k) return true;
  while (!candidates.empty()) {
    if (chosen.size() + candidates.size() < k) return false;
    const Vertex v = candidates.first();
    candidates.erase(v);
    chosen.push_back(v);
    if (clique_search(g, candidates & g.neighbors(v), k, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// DSATUR backtracking over one connected vertex set.
class Colorer {
 public:
  Colorer(const Graph& g, const VertexSet& verts, std::size_t colors)
      : g_(g), verts_(verts), order_(verts.to_vector()), colors_(colors),
        color_(g.order(), -1) {}

  bool run() { return assign(0, 0); }

 private:
  bool assign(std::size_t done, std::size_t used) {
    if (done == order_.size()) return true;
    // Pick the uncoloured vertex with the most distinct neighbour colours.
    Vertex best = VertexSet::npos;
    std::size_t best_sat = 0;
    std::size_t best_deg = 0;
    std::vector<char> seen(colors_);
    for (Vertex v : order_) {
      if (color_[v] >= 0) continue;
      std::fill(seen.begin(), seen.end(), 0);
      std::size_t sat = 0;
      std::size_t deg = 0;
      for (Vertex w : g_.neighbors(v) & verts_) {
        ++deg;
        if (color_[w] >= 0 && !seen[color_[w]]) {
          seen[color_[w]] = 1;
          ++sat;
        }
      }
      if (best == VertexSet::npos || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Vertex w : g_.neighbors(best) & verts_)
      if (color_[w] >= 0) seen[color_[w]] = 1;
    // Colours beyond the first unused one are symmetric.
    const std::size_t limit = std::min(colors_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (seen[c]) continue;
      color_[best] = static_cast<int>(c);
      if (assign(done + 1, std::max(used, c + 1))) return true;
    }
    color_[best] = -1;
    return false;
  }

  const Graph& g_;
  const VertexSet& verts_;
  std::vector<Vertex> order_;
  std::size_t colors_;
  std::vector<int> color_;
};

bool component_colorable(const Graph& g, const VertexSet& comp, std::size_t colors) {
  const std::size_t n = comp.size();
  if (n == 0) return true;
  if (colors == 0) return false;
  if (colors >= n) return true;
  std::size_t max_deg = 0;
  for (Vertex v : comp) max_deg = std::max(max_deg, (g.neighbors(v) & comp).size());
  if (max_deg < colors) return true;  // greedy colouring uses at most max_deg + 1 colours
  std::vector<Vertex> chosen;
  if (clique_search(g, peel_core(g, comp, colors), colors + 1, chosen)) return false;
  return Colorer(g, comp, colors).run();
}

std::optional<Witness> chromatic_witness(const Graph& g, const VertexSet& alive, int k) {
  if (k == 1) return any_vertex(g, alive, FamilyKind::ChromaticAtLeast);
  if (k == 2) return any_edge(g, alive, FamilyKind::ChromaticAtLeast);
  if (auto w = contains_clique(g, alive, k)) {
    w->certifies = FamilyKind::ChromaticAtLeast;
    return w;
  }
  const std::size_t colors = static_cast<std::size_t>(k - 1);
  for (const VertexSet& comp : component_sets(g, alive)) {
    if (component_colorable(g, comp, colors)) continue;
    // Shrink to a vertex-critical subgraph.
    VertexSet critical = comp;
    for (Vertex v : comp) {
      critical.erase(v);
      if (is_colorable(g, critical, colors)) critical.insert(v);
    }
    return make_witness(g, std::move(critical), FamilyKind::ChromaticAtLeast);
  }
  return std::nullopt;
}

// Searches for an r-regular spanning edge set of g[s].
class RegularFactor {
 public:
  RegularFactor(const Graph& g, const VertexSet& s, std::size_t r)
      : verts_(s.to_vector()), r_(r), deg_(verts_.size(), 0), later_(verts_.size()) {
    std::vector<std::size_t> local(g.order(), 0);
    for (std::size_t i = 0; i < verts_.size(); ++i) local[verts_[i]] = i;
    for (std::size_t i = 0; i < verts_.size(); ++i)
      for (Vertex w : g.neighbors(verts_[i]) & s)
        if (local[w] > i) later_[i].push_back(local[w]);
  }

  std::optional<std::vector<Edge>> find() {
    if (process(0)) {
      std::vector<Edge> edges;
      for (auto [i, j] : chosen_) edges.emplace_back(verts_[i], verts_[j]);
      std::sort(edges.begin(), edges.end());
      return edges;
    }
    return std::nullopt;
  }

 private:
  bool process(std::size_t i) {
    if (i == verts_.size()) return true;
    if (deg_[i] > r_) return false;
    const std::size_t need = r_ - deg_[i];
    std::vector<std::size_t> open;
    for (std::size_t j : later_[i])
      if (deg_[j] < r_) open.push_back(j);
    if (open.size() < need) return false;
    return choose(i, open, 0, need);
  }

  bool choose(std::size_t i, const std::vector<std::size_t>& open, std::size_t from, std::size_t need) {
    if (need == 0) {
      deg_[i] = r_;
      if (!feasible_after(i)) return false;
      return process(i + 1);
    }
    for (std::size_t p = from; p + need <= open.size(); ++p) {
      const std::size_t j = open[p];
      ++deg_[j];
      chosen_.emplace_back(i, j);
      const std::size_t saved = deg_[i];
      if (choose(i, open, p + 1, need - 1)) return true;
      deg_[i] = saved;
      chosen_.pop_back();
      --deg_[j];
    }
    return false;
  }

  // After vertex i is settled, every later vertex must still be able to
  // reach degree r through edges to vertices beyond i.
  bool feasible_after(std::size_t i) const {
    for (std::size_t j = i + 1; j < verts_.size(); ++j) {
      std::size_t room = 0;
      for (std::size_t l : later_[j])
        if (deg_[l] < r_) ++room;
      // Edges from vertices in (i, j) to j are also still open.
      for (std::size_t a = i + 1; a < j; ++a)
        if (deg_[a] < r_ && std::find(later_[a].begin(), later_[a].end(), j) != later_[a].end()) ++room;
      if (deg_[j] + room < r_) return false;
    }
    return true;
  }

  std::vector<Vertex> verts_;
  std::size_t r_;
  std::vector<std::size_t> deg_;
  std::vector<std::vector<std::size_t>> later_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
};

std::optional<Witness> regular_search(const Graph& g, const VertexSet& alive, std::size_t d) {
  const VertexSet core = peel_core(g, alive, d);
  if (core.empty()) return std::nullopt;
  if (auto w = contains_clique(g, core, static_cast<int>(d + 1))) {
    w->certifies = FamilyKind::MinRegular;
    return w;
  }

  // Connected vertex subsets of each core component, grown one size at a time.
  struct Level {
    VertexSet component;
    std::vector<VertexSet> subsets;
  };
  std::vector<Level> levels;
  std::size_t largest = 0;
  for (auto& comp : component_sets(g, core)) {
    largest = std::max(largest, comp.size());
    Level level{comp, {}};
    for (Vertex v : comp) level.subsets.emplace_back(g.order(), std::initializer_list<Vertex>{v});
    levels.push_back(std::move(level));
  }

  for (std::size_t s = 2; s <= largest; ++s) {
    for (Level& level : levels) {
      if (level.component.size() < s) {
        level.subsets.clear();
        continue;
      }
      std::unordered_set<VertexSet, VertexSetHash> grown;
      for (const VertexSet& sub : level.subsets) {
        VertexSet frontier(g.order());
        for (Vertex v : sub) frontier |= g.neighbors(v);
        frontier &= level.component;
        frontier -= sub;
        for (Vertex v : frontier) {
          VertexSet bigger = sub;
          bigger.insert(v);
          grown.insert(std::move(bigger));
        }
      }
      level.subsets.assign(grown.begin(), grown.end());
      std::sort(level.subsets.begin(), level.subsets.end());
    }
    if (s < d + 2) continue;  // d + 1 vertices would be a clique, ruled out above
    for (const Level& level : levels) {
      for (const VertexSet& sub : level.subsets) {
        std::size_t min_deg = s;
        for (Vertex v : sub) min_deg = std::min(min_deg, (g.neighbors(v) & sub).size());
        for (std::size_t r = d; r <= min_deg; ++r) {
          if ((r * s) % 2 != 0) continue;
          if (auto edges = RegularFactor(g, sub, r).find())
            return Witness{sub, std::move(*edges), FamilyKind::MinRegular};
        }
      }
    }
  }
  return std::nullopt;
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("clique/family parameter must be >= 1, got " + std::to_string(k));
}

}  // namespace

VertexSet peel_core(const Graph& g, const VertexSet& alive, std::size_t d) {
  VertexSet core = alive;
  if (d == 0) return core;
  std::vector<std::size_t> deg(g.order(), 0);
  std::vector<Vertex> queue;
  for (Vertex v : core) {
    deg[v] = (g.neighbors(v) & core).size();
    if (deg[v] < d) queue.push_back(v);
  }
  for (Vertex v : queue) core.erase(v);
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v) & core) {
      if (--deg[w] < d) {
        core.erase(w);
        queue.push_back(w);
      }
    }
  }
  return core;
}

std::optional<Witness> contains_clique(const Graph& g, int k) { return contains_clique(g, g.vertices(), k); }

std::optional<Witness> contains_clique(const Graph& g, const VertexSet& alive, int k) {
  check_k(k);
  require_valid(g, alive);
  std::vector<Vertex> chosen;
  if (!clique_search(g, peel_core(g, alive, static_cast<std::size_t>(k - 1)),
                     static_cast<std::size_t>(k), chosen))
    return std::nullopt;
  return make_witness(g, VertexSet(g.order(), chosen), FamilyKind::Clique);
}

bool is_colorable(const Graph& g, const VertexSet& alive, std::size_t colors) {
  require_valid(g, alive);
  for (const VertexSet& comp : component_sets(g, alive))
    if (!component_colorable(g, comp, colors)) return false;
  return true;
}

std::size_t chromatic_number(const Graph& g) { return chromatic_number(g, g.vertices()); }

std::size_t chromatic_number(const Graph& g, const VertexSet& alive) {
  require_valid(g, alive);
  std::size_t chi = 0;
  for (const VertexSet& comp : component_sets(g, alive)) {
    std::size_t c = std::max<std::size_t>(chi, 1);
    while (!component_colorable(g, comp, c)) ++c;
    chi = c;
  }
  return chi;
}

std::optional<Witness> has_regular_subgraph_min_degree(const Graph& g, int d) {
  return has_regular_subgraph_min_degree(g, g.vertices(), d);
}

std::optional<Witness> has_regular_subgraph_min_degree(const Graph& g, const VertexSet& alive, int d) {
  if (d < 0) throw std::invalid_argument("minimum degree must be >= 0");
  require_valid(g, alive);
  switch (d) {
    case 0: return any_vertex(g, alive, FamilyKind::MinRegular);
    case 1: return any_edge(g, alive, FamilyKind::MinRegular);
    case 2:
      if (auto w = has_cycle(g, alive)) {
        w->certifies = FamilyKind::MinRegular;
        return w;
      }
      return std::nullopt;
    default: return regular_search(g, alive, static_cast<std::size_t>(d));
  }
}

std::optional<Witness> has_cycle(const Graph& g) { return has_cycle(g, g.vertices()); }

std::optional<Witness> has_cycle(const Graph& g, const VertexSet& alive) {
  require_valid(g, alive);
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n, VertexSet::npos);
  std::vector<char> state(n, 0);  // 0 new, 1 on stack, 2 finished

  struct Frame {
    Vertex v;
    VertexSet pending;
  };
  for (Vertex root : alive) {
    if (state[root] != 0) continue;
    std::vector<Frame> stack;
    stack.push_back({root, g.neighbors(root) & alive});
    state[root] = 1;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const Vertex w = top.pending.first();
      if (w == VertexSet::npos) {
        state[top.v] = 2;
        stack.pop_back();
        continue;
      }
      top.pending.erase(w);
      if (w == parent[top.v]) continue;
      if (state[w] == 1) {
        // Back edge: the cycle is w .. top.v along the DFS stack.
        VertexSet cycle(n);
        std::vector<Edge> edges;
        Vertex x = top.v;
        cycle.insert(x);
        while (x != w) {
          const Vertex p = parent[x];
          edges.emplace_back(std::min(x, p), std::max(x, p));
          cycle.insert(p);
          x = p;
        }
        edges.emplace_back(std::min(top.v, w), std::max(top.v, w));
        std::sort(edges.begin(), edges.end());
        return Witness{std::move(cycle), std::move(edges), FamilyKind::Cycles};
      }
      if (state[w] == 0) {
        parent[w] = top.v;
        state[w] = 1;
        stack.push_back({w, g.neighbors(w) & alive});
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> contains_family(const Graph& g, const FamilySpec& family) {
  return contains_family(g, g.vertices(), family);
}

std::optional<Witness> contains_family(const Graph& g, const VertexSet& alive, const FamilySpec& family) {
  require_valid(g, alive);
  switch (family.kind) {
    case FamilyKind::Clique: return contains_clique(g, alive, family.k);
    case FamilyKind::Cycles: return has_cycle(g, alive);
    case FamilyKind::MinRegular:
      check_k(family.k);
      return has_regular_subgraph_min_degree(g, alive, family.k - 1);
    case FamilyKind::ChromaticAtLeast:
      check_k(family.k);
      return chromatic_witness(g, alive, family.k);
    case FamilyKind::RegularOrChromatic:
      check_k(family.k);
      if (auto w = has_regular_subgraph_min_degree(g, alive, family.k - 1)) return w;
      return chromatic_witness(g, alive, family.k);
  }
  return std::nullopt;
}

bool has_family_graph(const Graph& g, const VertexSet& alive, const FamilySpec& family) {
  switch (family.kind) {
    case FamilyKind::ChromaticAtLeast:
      check_k(family.k);
      if (family.k == 1) return !alive.empty();
      return !is_colorable(g, alive, static_cast<std::size_t>(family.k - 1));
    case FamilyKind::RegularOrChromatic:
      check_k(family.k);
      if (family.k == 1) return !alive.empty();
      if (!is_colorable(g, alive, static_cast<std::size_t>(family.k - 1))) return true;
      return has_regular_subgraph_min_degree(g, alive, family.k - 1).has_value();
    default: return contains_family(g, alive, family).has_value();
  }
}

bool verify_witness(const Graph& g, const Witness& w, const FamilySpec& family) {
  if (w.vertices.universe() != g.order() || w.vertices.empty()) return false;
  std::vector<std::size_t> deg(g.order(), 0);
  for (auto [u, v] : w.edges) {
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
    if (!w.vertices.contains(u) || !w.vertices.contains(v)) return false;
    ++deg[u];
    ++deg[v];
  }
  auto regular_with_min = [&](std::size_t d) {
    const std::size_t r = deg[w.vertices.first()];
    if (r < d) return false;
    for (Vertex v : w.vertices)
      if (deg[v] != r) return false;
    return true;
  };
  const std::size_t size = w.vertices.size();
  switch (family.kind) {
    case FamilyKind::Clique: {
      if (size != static_cast<std::size_t>(family.k)) return false;
      for (Vertex v : w.vertices)
        if (!w.vertices.is_subset_of(g.closed_neighbors(v))) return false;
      return true;
    }
    case FamilyKind::Cycles: {
      if (size < 3 || w.edges.size() != size || !regular_with_min(2)) return false;
      return component_sets(Graph::from_edges(g.order(), w.edges), w.vertices).size() == 1;
    }
    case FamilyKind::MinRegular: return regular_with_min(static_cast<std::size_t>(family.k - 1));
    case FamilyKind::ChromaticAtLeast:
      return chromatic_number(g, w.vertices) >= static_cast<std::size_t>(family.k);
    case FamilyKind::RegularOrChromatic:
      return regular_with_min(static_cast<std::size_t>(family.k - 1)) ||
             chromatic_number(g, w.vertices) >= static_cast<std::size_t>(family.k);
  }
  return false;
}

}  // namespace isolation
