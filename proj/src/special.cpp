#include "isolation/special.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "isolation/bounds.hpp"

namespace isolation {
namespace {

// Decodes a Prüfer sequence into the edges of a labelled tree.
std::vector<Edge> prufer_decode(const std::vector<Vertex>& seq, std::size_t order) {
  std::vector<std::size_t> degree(order, 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    --degree[leaf];
    --degree[v];
  }
  Vertex a = order;
  for (Vertex u = 0; u < order; ++u) {
    if (degree[u] != 1) continue;
    if (a == order) {
      a = u;
    } else {
      edges.emplace_back(a, u);
      break;
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Edge> draw_tree(std::size_t order, std::uint64_t seed, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (order < 2) return edges;
  if (seed == 0) {
    for (Vertex v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
    return edges;
  }
  std::uniform_int_distribution<Vertex> pick(0, order - 1);
  std::vector<Vertex> seq(order - 2);
  for (auto& x : seq) x = pick(rng);
  return prufer_decode(seq, order);
}

struct Block {
  VertexSet clique;
  Vertex attachment;
  Vertex connection;
  VertexSet all;  // clique plus connection
};

// Every (attachment a, connection c) pair whose local structure matches a
// clique constituent: N[a] - c is a k-clique whose other members have no
// neighbours outside it.
std::vector<Block> candidate_blocks(const Graph& g, int k) {
  std::vector<Block> out;
  const auto kk = static_cast<std::size_t>(k);
  for (Vertex a = 0; a < g.order(); ++a) {
    if (g.degree(a) != kk) continue;
    for (Vertex c : g.neighbors(a)) {
      VertexSet clique = g.closed_neighbors(a);
      clique.erase(c);
      bool ok = true;
      for (Vertex x : clique) {
        if (x != a && g.closed_neighbors(x) != clique) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      VertexSet all = clique;
      all.insert(c);
      out.push_back(Block{std::move(clique), a, c, std::move(all)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) {
    if (x.clique != y.clique) return x.clique < y.clique;
    return x.connection < y.connection;
  });
  return out;
}

bool cover(const std::vector<Block>& blocks, VertexSet& covered, std::vector<std::size_t>& picked) {
  const Vertex x = (covered.universe() == 0) ? VertexSet::npos
                                             : (VertexSet::full(covered.universe()) - covered).first();
  if (x == VertexSet::npos) return true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    if (!b.all.contains(x) || b.all.intersects(covered)) continue;
    covered |= b.all;
    picked.push_back(i);
    if (cover(blocks, covered, picked)) return true;
    picked.pop_back();
    covered -= b.all;
  }
  return false;
}

}  // namespace

std::vector<Edge> random_tree(std::size_t order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw_tree(order, seed, rng);
}

SpecialGraph build_special(std::size_t m, int k, std::uint64_t tree_seed) {
  const std::size_t t = t_k(k);  // validates k
  SpecialGraphDescriptor d;
  d.k = k;
  d.m = m;
  d.q = (m + 1) / t;
  d.r = (m + 1) % t;
  std::mt19937_64 rng(tree_seed);

  std::vector<Edge> edges;
  if (d.q == 0) {
    // m + 1 = r < t_k: the whole graph is an m-edge tree.
    d.remainder_tree = draw_tree(m + 1, tree_seed, rng);
    return {Graph::from_edges(m + 1, d.remainder_tree), d};
  }

  const auto kk = static_cast<std::size_t>(k);
  const std::size_t block = kk + 1;
  const std::size_t n = d.q * block + d.r;
  for (std::size_t i = 0; i < d.q; ++i) {
    const Vertex base = i * block;
    Constituent c{base, base + 1, VertexSet(n)};
    for (Vertex u = base + 1; u <= base + kk; ++u) {
      c.clique.insert(u);
      for (Vertex w = u + 1; w <= base + kk; ++w) edges.emplace_back(u, w);
    }
    edges.emplace_back(c.connection, c.attachment);
    d.constituents.push_back(std::move(c));
  }
  for (auto [a, b] : draw_tree(d.q, tree_seed, rng)) d.quotient_tree.emplace_back(a * block, b * block);

  // Remainder tree label 0 is the last connection vertex.
  const Vertex last = (d.q - 1) * block;
  auto place = [&](Vertex label) { return label == 0 ? last : d.q * block + label - 1; };
  for (auto [a, b] : draw_tree(d.r + 1, tree_seed, rng)) {
    const Vertex x = place(a);
    const Vertex y = place(b);
    d.remainder_tree.emplace_back(std::min(x, y), std::max(x, y));
  }

  edges.insert(edges.end(), d.quotient_tree.begin(), d.quotient_tree.end());
  edges.insert(edges.end(), d.remainder_tree.begin(), d.remainder_tree.end());
  return {Graph::from_edges(n, edges), std::move(d)};
}

std::optional<SpecialGraphDescriptor> recognize_pure_special(const Graph& g, int k) {
  if (k < 1) return std::nullopt;
  const std::size_t t = t_k(k);
  const std::size_t m = g.size();
  if ((m + 1) % t != 0) return std::nullopt;
  const std::size_t q = (m + 1) / t;
  if (g.order() != q * (static_cast<std::size_t>(k) + 1) || !is_connected(g)) return std::nullopt;

  const auto blocks = candidate_blocks(g, k);
  VertexSet covered(g.order());
  std::vector<std::size_t> picked;
  if (!cover(blocks, covered, picked)) return std::nullopt;

  // The cover accounts for q * (C(k,2) + 1) edges; the remaining q - 1 lie
  // between connection vertices and, by connectivity, form a tree.
  SpecialGraphDescriptor d;
  d.k = k;
  d.m = m;
  d.q = q;
  d.r = 0;
  VertexSet connections(g.order());
  for (std::size_t i : picked) {
    const Block& b = blocks[i];
    d.constituents.push_back(Constituent{b.connection, b.attachment, b.clique});
    connections.insert(b.connection);
  }
  for (auto [u, v] : g.edges()) {
    if (connections.contains(u) && connections.contains(v)) d.quotient_tree.emplace_back(u, v);
  }
  if (d.quotient_tree.size() + 1 != q) return std::nullopt;
  return d;
}

std::size_t predicted_isolation(const SpecialGraphDescriptor& d) {
  return d.pure() ? d.q : bound_value(d.m, d.k);
}

std::string describe(const SpecialGraphDescriptor& d) {
  std::ostringstream os;
  auto edges = [&](const std::vector<Edge>& list) {
    bool first = true;
    for (auto [u, v] : list) {
      os << (first ? "" : " ") << u << '-' << v;
      first = false;
    }
  };
  os << "k=" << d.k << "\nm=" << d.m << "\nq=" << d.q << "\nr=" << d.r
     << "\npure=" << (d.pure() ? "yes" : "no") << "\nquotient_tree=";
  edges(d.quotient_tree);
  os << "\nremainder_tree=";
  edges(d.remainder_tree);
  os << '\n';
  for (const auto& c : d.constituents) {
    os << "constituent=connection:" << c.connection << " attachment:" << c.attachment
       << " clique:" << c.clique.to_string() << '\n';
  }
  return os.str();
}

}  // namespace isolation
