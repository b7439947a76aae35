// Randomized checks of the solver against the exhaustive oracles.

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "hopdom/hopdom.hpp"
#include "support/naive_oracle.hpp"

namespace hopdom {
namespace {

using Nodes = std::vector<NodeId>;

std::vector<Digraph> instances() {
  std::vector<Digraph> out;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    GenSpec spec;
    spec.n = 1 + seed % 12;
    spec.seed = 7000 + seed;
    spec.p = std::array{0.5, 0.8, 0.9, 1.0}[seed % 4];
    out.push_back(generate(spec));
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    for (Shape shape : {Shape::kPath, Shape::kCycle, Shape::kStar}) {
      GenSpec spec;
      spec.shape = shape;
      spec.n = n;
      out.push_back(generate(spec));
    }
    for (std::size_t c = 1; c <= n; ++c) {
      GenSpec spec;
      spec.shape = Shape::kRho;
      spec.n = n;
      spec.cycle_length = c;
      spec.tree_nodes = n - c;
      spec.seed = 31 * n + c;
      out.push_back(generate(spec));
    }
  }
  return out;
}

// Hop distance along the unique path u -> ... -> v, or none.
std::optional<Hops> distance(const Digraph& g, NodeId u, NodeId v) {
  Hops steps = 0;
  NodeId at = v;
  std::set<NodeId> seen;
  while (at != u) {
    if (!seen.insert(at).second) return std::nullopt;
    const auto p = g.parent(at);
    if (!p) return std::nullopt;
    at = *p;
    ++steps;
  }
  return steps;
}

void check_trace(const Digraph& g, const Solution& sol, Hops d) {
  std::vector<int> seen(g.node_count(), 0);
  std::multiset<NodeId> chosen;
  for (const auto& step : sol.trace.steps) {
    for (NodeId v : step_covered(step)) ++seen[v];
    if (const auto* leaf = std::get_if<LeafStep>(&step)) {
      chosen.insert(leaf->dominator);
      const auto reach = covered_set(g, leaf->dominator, d);
      ASSERT_TRUE(std::binary_search(reach.begin(), reach.end(), leaf->leaf));
      ASSERT_TRUE(std::binary_search(leaf->covered.begin(), leaf->covered.end(), leaf->leaf));
      ASSERT_TRUE(std::includes(reach.begin(), reach.end(), leaf->covered.begin(),
                                leaf->covered.end()));
    } else if (const auto* cyc = std::get_if<CycleStep>(&step)) {
      chosen.insert(cyc->placed.begin(), cyc->placed.end());
    } else if (const auto* cut = std::get_if<CycleCutStep>(&step)) {
      chosen.insert(cut->dominator);
      ASSERT_LE(cut->candidates, std::size_t{d} + 1);
    }
  }
  for (NodeId v = 0; v < g.node_count(); ++v) ASSERT_EQ(seen[v], 1) << "node " << v;
  ASSERT_EQ(Nodes(chosen.begin(), chosen.end()), sol.set.members);
}

TEST(SolverProperties, OptimalMatchesOracles) {
  for (const Digraph& g : instances()) {
    std::size_t previous = g.node_count() + 1;
    for (Hops d = 1; d <= 6; ++d) {
      const Solution sol = solve(g, {d});
      ASSERT_TRUE(verify(g, sol.set.members, d).valid);
      ASSERT_EQ(sol.set.size(), brute_force_min(g, d).set.size()) << serialize_graph(g) << d;
      ASSERT_EQ(sol.set.size(), testing::naive_min(g.node_count(), g.edges(), d));
      ASSERT_LE(sol.set.size(), previous);
      previous = sol.set.size();
      check_trace(g, sol, d);
    }
  }
}

TEST(SolverProperties, PaperLiteralIsValidAndTraceable) {
  for (const Digraph& g : instances()) {
    for (Hops d : {1u, 2u, 3u, 5u}) {
      const Solution sol = solve(g, {d, CycleMode::kPaperLiteral});
      ASSERT_TRUE(verify(g, sol.set.members, d).valid);
      ASSERT_GE(sol.set.size(), solve(g, {d}).set.size());
      check_trace(g, sol, d);

      // Replaying the removals keeps the graph well formed, and every
      // dominator sits min(d, available) hops above its leaf.
      Digraph work = g;
      for (const auto& step : sol.trace.steps) {
        if (const auto* leaf = std::get_if<LeafStep>(&step)) {
          ASSERT_EQ(pick_dominator(work, leaf->leaf, d), leaf->dominator);
          ASSERT_EQ(covered_set(work, leaf->dominator, d), leaf->covered);
          const auto dist = distance(work, leaf->dominator, leaf->leaf);
          ASSERT_TRUE(dist.has_value());
          ASSERT_LE(*dist, d);
        }
        work.remove_nodes(step_covered(step));
        ASSERT_EQ(work.check_invariants(), "");
      }
      ASSERT_EQ(work.alive_count(), 0u);
    }
  }
}

TEST(SolverProperties, TreeDominatorsSitExactlyMinDepthHopsUp) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec spec;
    spec.shape = Shape::kForest;
    spec.n = 5 + seed % 40;
    spec.components = 1 + seed % 4;
    spec.seed = seed;
    const Digraph g = generate(spec);
    for (Hops d : {1u, 2u, 3u}) {
      for (const auto& step : solve(g, {d}).trace.steps) {
        const auto& leaf = std::get<LeafStep>(step);
        Hops depth = 0;
        for (NodeId at = leaf.leaf; g.parent(at); at = *g.parent(at)) ++depth;
        ASSERT_EQ(distance(g, leaf.dominator, leaf.leaf), std::min(d, depth));
      }
    }
  }
}

TEST(SolverProperties, PureCycleFormulas) {
  for (std::size_t n = 1; n <= 12; ++n) {
    Nodes cycle(n);
    std::iota(cycle.begin(), cycle.end(), NodeId{0});
    GenSpec spec;
    spec.shape = Shape::kCycle;
    spec.n = n;
    const Digraph g = generate(spec);
    for (Hops d = 1; d <= 5; ++d) {
      const auto optimal = solve_pure_cycle(cycle, d, CycleMode::kOptimal);
      const auto literal = solve_pure_cycle(cycle, d, CycleMode::kPaperLiteral);
      ASSERT_EQ(optimal.size(), (n + d) / (d + 1));
      ASSERT_EQ(literal.size(), (n + d - 1) / d);
      ASSERT_TRUE(verify(g, optimal, d).valid);
      ASSERT_TRUE(verify(g, literal, d).valid);
      ASSERT_EQ(optimal.size(), brute_force_min(g, d).set.size());
      ASSERT_EQ(literal.size() == optimal.size(), (n + d - 1) / d == (n + d) / (d + 1));
    }
  }
}

TEST(SolverProperties, LargeInstancesStayValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec;
    spec.n = 2000;
    spec.seed = seed;
    spec.p = seed % 2 ? 1.0 : 0.9;
    const Digraph g = generate(spec);
    for (Hops d : {1u, 3u, 8u}) {
      const Solution exact = solve(g, {d});
      const Solution literal = solve(g, {d, CycleMode::kPaperLiteral});
      ASSERT_TRUE(verify(g, exact.set.members, d).valid);
      ASSERT_TRUE(verify(g, literal.set.members, d).valid);
      ASSERT_LE(exact.set.size(), literal.set.size());
      check_trace(g, exact, d);
    }
  }
}

}  // namespace
}  // namespace hopdom
