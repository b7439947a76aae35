#ifndef HOPDOM_SOLVER_HPP
#define HOPDOM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hopdom/graph.hpp"

namespace hopdom {

enum class CycleMode {
  // Exact minimum: ceil(n / (d + 1)) on pure cycles, and cycle-with-trees
  // components are cut open at a cycle dominator before the leaf greedy.
  kOptimal,
  // The printed greedy: ceil(n / d) on pure cycles and the plain
  // farthest-leaf removal loop everywhere else.
  kPaperLiteral,
};

std::string_view to_string(CycleMode mode);
std::optional<CycleMode> cycle_mode_from_string(std::string_view text);

struct SolveConfig {
  Hops d = 1;
  CycleMode cycle_mode = CycleMode::kOptimal;
};

struct DominatingSet {
  std::vector<NodeId> members;  // ascending
  Hops d = 1;

  std::size_t size() const { return members.size(); }
};

// Each step lists the nodes it newly covers. Across a trace these sets are
// pairwise disjoint and together hold every live node.

// The deepest uncovered leaf `leaf` is dominated from `dominator`, its
// ancestor min(d, available) hops up.
struct LeafStep {
  NodeId anchor;  // smallest id of the component the step ran in
  NodeId leaf;
  NodeId dominator;
  std::vector<NodeId> covered;
};

// Arithmetic placement around a component that is exactly one cycle.
struct CycleStep {
  std::size_t cycle_length;
  std::vector<NodeId> placed;
  std::vector<NodeId> covered;
};

// A cycle with trees attached is opened at `dominator`, the cycle node chosen
// to cover the cycle's smallest node `anchor`. `candidates` cycle nodes were
// tried; this one led to the fewest dominators.
struct CycleCutStep {
  NodeId anchor;
  NodeId dominator;
  std::size_t candidates;
  std::vector<NodeId> covered;
};

// Produced by the exhaustive oracle in place of greedy decisions.
struct ExhaustiveStep {
  std::vector<NodeId> witness;
  std::uint64_t subsets_checked;
  std::vector<NodeId> covered;
};

using SolveStep = std::variant<LeafStep, CycleStep, CycleCutStep, ExhaustiveStep>;

struct SolveTrace {
  std::vector<SolveStep> steps;
};

struct Solution {
  DominatingSet set;
  SolveTrace trace;
};

// Minimum d-hop dominating set of an indegree <= 1 graph. The input is not
// modified. Throws std::invalid_argument when cfg.d == 0.
Solution solve(const Digraph& g, const SolveConfig& cfg);

// Farthest-leaf removal loop: per weak component, repeatedly dominate the
// deepest leaf from pick_dominator() and delete covered_set(); components
// that are a bare cycle use solve_pure_cycle() with `cycle_formula`.
// Always valid, but not minimal once the dominator wraps onto a cycle that
// has trees attached.
Solution solve_greedy_removal(const Digraph& g, Hops d, CycleMode cycle_formula);

// Walks parent links from v for at most d steps, stopping early at a node
// without a parent or before re-entering a node already walked.
NodeId pick_dominator(const Digraph& g, NodeId v, Hops d);

// Dominators for a bare cycle given in edge order, placed every d + 1 (or,
// for kPaperLiteral, every d) positions starting at cycle[0]. Ascending.
std::vector<NodeId> solve_pure_cycle(std::span<const NodeId> cycle, Hops d, CycleMode mode);

inline std::vector<NodeId> covered_set(const Digraph& g, NodeId u, Hops d) {
  return reachable_within(g, u, d);
}

// Covered nodes of a step, whichever alternative it holds.
std::span<const NodeId> step_covered(const SolveStep& step);

}  // namespace hopdom

#endif  // HOPDOM_SOLVER_HPP
