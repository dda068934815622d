#include "isolation/construct.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "isolation/bounds.hpp"
#include "isolation/detectors.hpp"
#include "isolation/family.hpp"
#include "isolation/solver.hpp"

namespace isolation {
namespace {

// Works on pieces of one host graph given as vertex sets, so every set in
// the trace is already in the caller's labels.
class Constructor {
 public:
  Constructor(const Graph& g, int k) : g_(g), k_(k), kk_(static_cast<std::size_t>(k)), family_(FamilySpec::regular_or_chromatic(k)) {}

  VertexSet run() { return solve_connected(g_.vertices(), 0); }

  ConstructionTrace take_trace() { return std::move(trace_); }

 private:
  std::size_t degree_in(Vertex v, const VertexSet& s) const { return (g_.neighbors(v) & s).size(); }

  std::size_t edges_in(const VertexSet& s) const {
    std::size_t twice = 0;
    for (Vertex v : s) twice += degree_in(v, s);
    return twice / 2;
  }

  VertexSet closed_in(Vertex v, const VertexSet& s) const { return g_.closed_neighbors(v) & s; }

  bool is_k_clique(const VertexSet& s) const {
    if (s.size() != kk_) return false;
    for (Vertex v : s)
      if (degree_in(v, s) != kk_ - 1) return false;
    return true;
  }

  bool is_c4(const VertexSet& s) const {
    if (s.size() != 4) return false;
    for (Vertex v : s)
      if (degree_in(v, s) != 2) return false;
    return true;
  }

  bool isolates(const VertexSet& s, const VertexSet& d) const {
    VertexSet residual = s;
    for (Vertex v : d) residual -= g_.closed_neighbors(v);
    return !has_family_graph(g_, residual, family_);
  }

  VertexSet single(Vertex v) const {
    VertexSet out = g_.empty_set();
    out.insert(v);
    return out;
  }

  // Any connected piece: F-free pieces need nothing, a K_k piece needs one
  // vertex, everything else goes through the case analysis.
  VertexSet solve_any(const VertexSet& s, std::size_t depth) {
    if (!has_family_graph(g_, s, family_)) return g_.empty_set();
    if (is_k_clique(s)) {
      const VertexSet d = single(s.first());
      trace_.steps.push_back({CaseTag::Case2_Dominating, Adjustment::None, depth, s, d, g_.empty_set(), {}, d});
      return d;
    }
    return solve_connected(s, depth);
  }

  VertexSet solve_connected(const VertexSet& s, std::size_t depth) {
    const std::size_t slot = trace_.steps.size();
    trace_.steps.push_back({CaseTag::Case1_1, Adjustment::None, depth, s, g_.empty_set(), g_.empty_set(), {}, g_.empty_set()});
    VertexSet d = contains_clique(g_, s, k_) ? case_two(s, depth, slot) : case_one(s, depth, slot);
    trace_.steps[slot].result = d;

    if (!isolates(s, d)) {
      throw std::logic_error(std::string(case_tag_name(trace_.steps[slot].tag)) + " produced a non-isolating set " +
                             d.to_string() + " on " + s.to_string());
    }
    const std::size_t bound = bound_value(edges_in(s), k_);
    if (d.size() > bound) d = repair(s, d, bound, depth, trace_.steps[slot].tag);
    return d;
  }

  // Runs recursive calls on each piece and records them on the step.
  VertexSet recurse(const std::vector<VertexSet>& pieces, std::size_t depth, std::size_t slot) {
    VertexSet out = g_.empty_set();
    for (const auto& p : pieces) {
      trace_.steps[slot].recursed.push_back(p);
      out |= solve_any(p, depth + 1);
    }
    return out;
  }

  VertexSet choose(std::size_t slot, CaseTag tag, VertexSet chosen) {
    trace_.steps[slot].tag = tag;
    trace_.steps[slot].chosen = chosen;
    return chosen;
  }

  VertexSet case_one(const VertexSet& s, std::size_t depth, std::size_t slot) {
    for (Vertex v : s) {
      if (degree_in(v, s) + 2 <= kk_) {
        choose(slot, CaseTag::Case1_1, g_.empty_set());
        VertexSet rest = s;
        rest.erase(v);
        return recurse(component_sets(g_, rest), depth, slot);
      }
    }

    Vertex v = s.first();
    for (Vertex w : s)
      if (degree_in(w, s) > degree_in(v, s)) v = w;
    if (degree_in(v, s) + 1 == kk_) return choose(slot, CaseTag::Case1_2_Regular, single(v));
    const VertexSet nv = closed_in(v, s);
    if (nv == s) return choose(slot, CaseTag::Case1_2_Dominating, single(v));

    const auto pieces = component_sets(g_, s - nv);
    if (k_ == 3) {
      for (const auto& c4 : pieces) {
        if (!is_c4(c4)) continue;
        const VertexSet open = nv - single(v);
        Vertex y1 = VertexSet::npos;
        for (Vertex y : c4) {
          if (g_.neighbors(y).intersects(open)) {
            y1 = y;
            break;
          }
        }
        const VertexSet z12 = g_.neighbors(y1) & c4;
        VertexSet g1 = s - z12;
        g1.erase(y1);
        VertexSet z3 = c4 - z12;
        z3.erase(y1);
        if (!g_.neighbors(z3.first()).intersects(g1)) g1 -= z3;
        VertexSet d = choose(slot, CaseTag::Case1_2_C4Fix, single(y1));
        return d | recurse(component_sets(g_, g1), depth, slot);
      }
    }
    VertexSet d = choose(slot, CaseTag::Case1_2_Recurse, single(v));
    return d | recurse(pieces, depth, slot);
  }

  VertexSet case_two(const VertexSet& s, std::size_t depth, std::size_t slot) {
    const VertexSet clique = contains_clique(g_, s, k_)->vertices;
    Vertex v = VertexSet::npos;
    for (Vertex c : clique) {
      if (!(closed_in(c, s) - clique).empty()) {
        v = c;
        break;
      }
    }
    const VertexSet nv = closed_in(v, s);
    if (nv == s) return choose(slot, CaseTag::Case2_Dominating, single(v));
    const VertexSet x_set = nv - single(v);

    struct Piece {
      VertexSet vertices;
      VertexSet links;
      bool clique;
    };
    std::vector<Piece> pieces;
    bool any_clique = false;
    for (auto& h : component_sets(g_, s - nv)) {
      VertexSet links = g_.empty_set();
      for (Vertex x : x_set)
        if (g_.neighbors(x).intersects(h)) links.insert(x);
      const bool kc = is_k_clique(h);
      any_clique = any_clique || kc;
      pieces.push_back({std::move(h), std::move(links), kc});
    }

    if (!any_clique) {
      std::vector<VertexSet> all;
      for (const auto& p : pieces) all.push_back(p.vertices);
      VertexSet d = choose(slot, CaseTag::Case2_1, single(v));
      return d | recurse(all, depth, slot);
    }

    const Piece* lone = nullptr;
    for (const auto& p : pieces) {
      if (p.clique && p.links.size() == 1) {
        lone = &p;
        break;
      }
    }

    if (lone == nullptr) {
      const Piece* h_prime = nullptr;
      for (const auto& p : pieces) {
        if (p.clique) {
          h_prime = &p;
          break;
        }
      }
      const Vertex x = h_prime->links.first();
      std::vector<VertexSet> hanging;
      for (const auto& p : pieces)
        if (!p.clique && p.links == single(x)) hanging.push_back(p.vertices);
      Vertex y = VertexSet::npos;
      for (Vertex w : h_prime->vertices) {
        if (g_.adjacent(w, x)) {
          y = w;
          break;
        }
      }
      VertexSet star = s - h_prime->vertices;
      star.erase(x);
      VertexSet star_v = g_.empty_set();
      for (auto& c : component_sets(g_, star))
        if (c.contains(v)) star_v = c;

      trace_.steps[slot].tag = CaseTag::Case2_2_1;
      if (!is_k_clique(star_v)) {
        trace_.steps[slot].chosen = single(y);
        std::vector<VertexSet> next{star_v};
        next.insert(next.end(), hanging.begin(), hanging.end());
        return single(y) | recurse(next, depth, slot);
      }
      // G*_v is a k-clique: x alone may suffice, otherwise y and v cover
      // both cliques.
      VertexSet core = h_prime->vertices | star_v;
      core.insert(x);
      const VertexSet d0 = isolates(core, single(x)) ? single(x) : (single(y) | single(v));
      trace_.steps[slot].chosen = d0;
      return d0 | recurse(hanging, depth, slot);
    }

    const Vertex x = lone->links.first();
    VertexSet g_v = s;
    g_v.erase(x);
    std::vector<VertexSet> hanging;
    for (const auto& p : pieces) {
      if (p.links != single(x)) continue;
      g_v -= p.vertices;
      if (!p.clique) hanging.push_back(p.vertices);
    }
    VertexSet d = choose(slot, CaseTag::Case2_2_2_Fallback, single(x));
    std::vector<VertexSet> next;
    if (!is_k_clique(g_v)) next.push_back(g_v);
    next.insert(next.end(), hanging.begin(), hanging.end());
    return d | recurse(next, depth, slot);
  }

  VertexSet repair(const VertexSet& s, const VertexSet& assembled, std::size_t bound, std::size_t depth, CaseTag tag) {
    VertexSet d = assembled;
    for (Vertex v : assembled) {
      VertexSet trial = d;
      trial.erase(v);
      if (isolates(s, trial)) d = std::move(trial);
    }
    bool improved = true;
    while (d.size() > bound && improved) {
      improved = false;
      const auto members = d.to_vector();
      for (std::size_t i = 0; i < members.size() && !improved; ++i) {
        for (std::size_t j = i + 1; j < members.size() && !improved; ++j) {
          VertexSet base = d;
          base.erase(members[i]);
          base.erase(members[j]);
          for (Vertex c : s) {
            VertexSet trial = base;
            trial.insert(c);
            if (isolates(s, trial)) {
              d = std::move(trial);
              improved = true;
              break;
            }
          }
        }
      }
    }
    Adjustment how = Adjustment::LocalSearch;
    if (d.size() > bound) {
      const Subgraph piece = induced_subgraph(g_, s);
      d = piece.lift(isolation_number(piece.graph, family_).set, g_.order());
      how = Adjustment::ExactSolver;
    }
    trace_.steps.push_back({tag, how, depth, s, d - assembled, assembled - d, {}, d});
    return d;
  }

  const Graph& g_;
  int k_;
  std::size_t kk_;
  FamilySpec family_;
  ConstructionTrace trace_;
};

}  // namespace

std::string_view case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1_1: return "Case1.1";
    case CaseTag::Case1_2_Regular: return "Case1.2-regular";
    case CaseTag::Case1_2_Dominating: return "Case1.2-dominating";
    case CaseTag::Case1_2_Recurse: return "Case1.2-recurse";
    case CaseTag::Case1_2_C4Fix: return "Case1.2-C4fix";
    case CaseTag::Case2_Dominating: return "Case2-dominating";
    case CaseTag::Case2_1: return "Case2.1";
    case CaseTag::Case2_2_1: return "Case2.2.1";
    case CaseTag::Case2_2_2_Fallback: return "Case2.2.2-fallback";
  }
  return "?";
}

std::string_view adjustment_name(Adjustment a) {
  switch (a) {
    case Adjustment::None: return "none";
    case Adjustment::LocalSearch: return "local-search";
    case Adjustment::ExactSolver: return "exact-solver";
  }
  return "?";
}

VertexSet ConstructionTrace::replay(std::size_t order) const {
  VertexSet d(order);
  for (const auto& step : steps) {
    d |= step.chosen;
    d -= step.removed;
  }
  return d;
}

bool ConstructionTrace::flagged() const {
  for (const auto& step : steps)
    if (step.adjustment != Adjustment::None) return true;
  return false;
}

std::size_t ConstructionTrace::repairs(Adjustment kind) const {
  std::size_t count = 0;
  for (const auto& step : steps)
    if (step.adjustment == kind) ++count;
  return count;
}

std::string ConstructionTrace::to_text() const {
  std::ostringstream os;
  for (const auto& step : steps) {
    os << std::string(2 * step.depth, ' ') << case_tag_name(step.tag);
    if (step.adjustment != Adjustment::None) {
      os << " repair=" << adjustment_name(step.adjustment) << " add=" << step.chosen.to_string()
         << " drop=" << step.removed.to_string();
    } else {
      os << " on=" << step.subgraph.to_string() << " chose=" << step.chosen.to_string();
      if (!step.recursed.empty()) {
        os << " recurse=";
        for (std::size_t i = 0; i < step.recursed.size(); ++i) os << (i ? ";" : "") << step.recursed[i].to_string();
      }
    }
    os << " result=" << step.result.to_string() << '\n';
  }
  return os.str();
}

Construction construct_isolating(const Graph& g, int k, int l) {
  if (k < 1) throw std::invalid_argument("k must be at least 1, got " + std::to_string(k));
  if (l < 1 || l > 3) throw std::invalid_argument("l must be 1, 2 or 3, got " + std::to_string(l));
  if (g.order() == 0) throw std::invalid_argument("graph has no vertices");
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected; construct per component");
  if (g.order() == static_cast<std::size_t>(k) && is_complete(g))
    throw std::invalid_argument("graph is K_" + std::to_string(k) + "; the edge bound excludes it");

  Constructor c(g, k);
  Construction out;
  if (has_family_graph(g, g.vertices(), FamilySpec::regular_or_chromatic(k))) {
    out.set = c.run();
  } else {
    out.set = g.empty_set();
  }
  out.trace = c.take_trace();
  if (!is_isolating(g, FamilySpec::indexed(l, k), out.set))
    throw std::logic_error("constructed set " + out.set.to_string() + " does not isolate " + FamilySpec::indexed(l, k).name());
  return out;
}

}  // namespace isolation
