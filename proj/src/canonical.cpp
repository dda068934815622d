#include "isolation/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "isolation/graph_io.hpp"

namespace isolation {
namespace {

// Colour refinement started from degrees. Colours are ranks of sorted
// signatures, so they do not depend on the input labelling.
std::vector<std::size_t> refine_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> s{color[v]};
      std::vector<std::size_t> around;
      for (Vertex w : g.neighbors(v)) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<std::size_t>> keys;
    for (auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (auto& [s, v] : sig)
      color[v] = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin());
    if (keys.size() == classes) break;
    classes = keys.size();
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    const auto color = refine_colors(g);
    std::vector<Vertex> by_color(n_);
    for (Vertex v = 0; v < n_; ++v) by_color[v] = v;
    std::stable_sort(by_color.begin(), by_color.end(),
                     [&](Vertex a, Vertex b) { return color[a] < color[b]; });
    cell_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) cell_[p] = color[by_color[p]];
    color_ = color;
    perm_.assign(n_, 0);
    used_.assign(n_, false);
    cur_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    place(0);
    return best_perm_;
  }

 private:
  bool twins(Vertex a, Vertex b) const {
    VertexSet na = g_.neighbors(a);
    VertexSet nb = g_.neighbors(b);
    na.erase(b);
    nb.erase(a);
    return na == nb;
  }

  // -1, 0, +1 comparing cur_[0..p] with best_[0..p].
  int compare_prefix(std::size_t p) const {
    for (std::size_t i = 0; i <= p; ++i) {
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void place(std::size_t p) {
    if (p == n_) {
      if (!have_best_ || compare_prefix(n_ - 1) > 0) {
        best_ = cur_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex w = 0; w < n_; ++w) {
      if (used_[w] || color_[w] != cell_[p]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, w); })) continue;
      tried.push_back(w);
      std::uint64_t column = 0;
      for (std::size_t i = 0; i < p; ++i) column = (column << 1) | (g_.adjacent(perm_[i], w) ? 1 : 0);
      cur_[p] = column;
      if (have_best_ && compare_prefix(p) < 0) continue;
      perm_[p] = w;
      used_[w] = true;
      place(p + 1);
      used_[w] = false;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> cell_;
  std::vector<Vertex> perm_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> cur_;
  std::vector<std::uint64_t> best_;
  std::vector<Vertex> best_perm_;
  bool have_best_ = false;
};

std::vector<std::vector<Graph>> all_graph_levels(std::size_t max_n) {
  std::vector<std::vector<Graph>> levels(max_n + 1);
  levels[0].push_back(Graph());
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::map<std::string, Graph> seen;
    for (const Graph& parent : levels[n - 1]) {
      const auto base = parent.edges();
      const std::size_t subsets = std::size_t{1} << (n - 1);
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        auto edges = base;
        for (Vertex v = 0; v + 1 < n; ++v)
          if ((mask >> v) & 1U) edges.emplace_back(v, n - 1);
        Graph canon = canonical_form(Graph::from_edges(n, edges));
        std::string key = write_graph6(canon);
        seen.try_emplace(std::move(key), std::move(canon));
      }
    }
    for (auto& [key, graph] : seen) levels[n].push_back(std::move(graph));
  }
  return levels;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > 64) throw GraphError("canonical_form supports at most 64 vertices");
  if (g.order() == 0) return g;
  const auto perm = CanonicalSearch(g).run();
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < perm.size(); ++p) position[perm[p]] = p;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(std::min(position[u], position[v]), std::max(position[u], position[v]));
  return Graph::from_edges(g.order(), edges);
}

std::string canonical_key(const Graph& g) { return write_graph6(canonical_form(g)); }

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > 9) throw std::out_of_range("enumerate_graphs supports n <= 9");
  return all_graph_levels(n)[n];
}

std::vector<Graph> enumerate_connected(std::size_t n) {
  if (n < 1 || n > 8) throw std::out_of_range("enumerate_connected supports 1 <= n <= 8, got " + std::to_string(n));
  std::vector<Graph> out;
  for (auto& g : enumerate_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_connected_up_to(std::size_t max_n) {
  if (max_n < 1 || max_n > 8) throw std::out_of_range("enumerate_connected_up_to supports 1 <= n <= 8, got " + std::to_string(max_n));
  auto levels = all_graph_levels(max_n);
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : levels[n])
      if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace isolation
