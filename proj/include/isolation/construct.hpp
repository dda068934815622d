#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

enum class CaseTag {
  Case1_1,
  Case1_2_Regular,
  Case1_2_Dominating,
  Case1_2_Recurse,
  Case1_2_C4Fix,
  Case2_Dominating,
  Case2_1,
  Case2_2_1,
  Case2_2_2_Fallback,
};

/// "Case1.1", "Case1.2-regular", ... as written in trace logs.
std::string_view case_tag_name(CaseTag tag);

/// How a step's set was obtained. Repairs replace a subtree's assembled set
/// when it came out larger than the bound for that subtree.
enum class Adjustment { None, LocalSearch, ExactSolver };

std::string_view adjustment_name(Adjustment a);

struct TraceStep {
  CaseTag tag = CaseTag::Case1_1;
  Adjustment adjustment = Adjustment::None;
  std::size_t depth = 0;
  VertexSet subgraph;               // vertices of the connected piece handled
  VertexSet chosen;                 // vertices added by this step
  VertexSet removed;                // vertices dropped (repairs only)
  std::vector<VertexSet> recursed;  // pieces handed to recursive calls
  VertexSet result;                 // the piece's set once the step finishes
};

/// Steps in pre-order. All vertex sets use the input graph's labels.
struct ConstructionTrace {
  std::vector<TraceStep> steps;

  /// Folds the steps: adds `chosen`, then drops `removed`, in order.
  VertexSet replay(std::size_t order) const;
  /// True iff some step is a repair.
  bool flagged() const;
  std::size_t repairs(Adjustment kind) const;
  /// One line per step.
  std::string to_text() const;
};

struct Construction {
  VertexSet set;
  ConstructionTrace trace;
};

/// Builds an F_{l,k}-isolating set of size at most floor((m+1)/t_k) for a
/// connected graph that is not K_k, following the case analysis of the edge
/// bound's inductive proof. The set isolates the union family for every l.
///
/// Each recursive piece's set is re-verified with the detectors; a set that
/// fails to isolate raises std::logic_error, and one over the bound is
/// repaired (local search, then the exact solver) and flagged in the trace.
///
/// Throws std::invalid_argument if g is disconnected, null or K_k, if k < 1,
/// or if l is not 1, 2 or 3.
Construction construct_isolating(const Graph& g, int k, int l);

}  // namespace isolation
