#include "hopdom/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "hopdom/decomposition.hpp"

namespace hopdom {

std::string_view to_string(CycleMode mode) {
  return mode == CycleMode::kOptimal ? "optimal" : "paper";
}

std::optional<CycleMode> cycle_mode_from_string(std::string_view text) {
  if (text == "optimal") return CycleMode::kOptimal;
  if (text == "paper") return CycleMode::kPaperLiteral;
  return std::nullopt;
}

std::span<const NodeId> step_covered(const SolveStep& step) {
  return std::visit([](const auto& s) { return std::span<const NodeId>(s.covered); }, step);
}

NodeId pick_dominator(const Digraph& g, NodeId v, Hops d) {
  g.check_alive(v);
  std::unordered_set<NodeId> walked{v};
  NodeId u = v;
  for (Hops step = 0; step < d; ++step) {
    const NodeId p = g.parent_or_none(u);
    if (p == kNoNode || walked.count(p) != 0) break;
    walked.insert(p);
    u = p;
  }
  return u;
}

std::vector<NodeId> solve_pure_cycle(std::span<const NodeId> cycle, Hops d, CycleMode mode) {
  if (cycle.empty()) throw std::invalid_argument("solve_pure_cycle: empty cycle");
  if (d == 0) throw std::invalid_argument("solve_pure_cycle: d must be >= 1");
  const std::size_t stride = mode == CycleMode::kOptimal ? std::size_t{d} + 1 : std::size_t{d};
  std::vector<NodeId> placed;
  for (std::size_t pos = 0; pos < cycle.size(); pos += stride) placed.push_back(cycle[pos]);
  std::sort(placed.begin(), placed.end());
  return placed;
}

namespace {

void check_radius(Hops d) {
  if (d == 0) throw std::invalid_argument("hop radius d must be >= 1");
}

Solution finish(std::vector<NodeId> members, Hops d, SolveTrace trace) {
  std::sort(members.begin(), members.end());
  return {DominatingSet{std::move(members), d}, std::move(trace)};
}

CycleStep cycle_step(const Component& comp, Hops d, CycleMode mode) {
  return {comp.cycle.size(), solve_pure_cycle(comp.cycle, d, mode), comp.nodes};
}

// Splits the live part of `nodes` into weak components, ordered by smallest id.
std::vector<std::vector<NodeId>> live_components(const Digraph& g, std::span<const NodeId> nodes,
                                                 std::vector<char>& mark) {
  std::vector<std::vector<NodeId>> parts;
  for (NodeId start : nodes) {
    if (!g.alive(start) || mark[start]) continue;
    std::vector<NodeId> part{start};
    mark[start] = 1;
    for (std::size_t head = 0; head < part.size(); ++head) {
      const NodeId v = part[head];
      auto visit = [&](NodeId w) {
        if (!mark[w]) {
          mark[w] = 1;
          part.push_back(w);
        }
      };
      if (const NodeId p = g.parent_or_none(v); p != kNoNode) visit(p);
      g.for_each_out_neighbor(v, visit);
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  for (const auto& part : parts) {
    for (NodeId v : part) mark[v] = 0;
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

// ---------------------------------------------------------------------------
// Exact solver.
//
// On an out-tree, the deepest uncovered node v can only be dominated by one of
// its d nearest ancestors, and the highest of them reaches every node of
// depth <= depth(v) that any lower one reaches. Greedily taking that ancestor,
// deepest uncovered node first, is therefore optimal. Covered nodes stay
// available as dominators, which matters once a dominator is forced.
//
// Cycle nodes are reachable only from cycle nodes, so some cycle node within
// d hops behind the cycle's anchor is in every solution. Fixing that node
// makes its incoming cycle edge useless, which leaves an out-tree rooted there
// with a forced dominator. Trying each of the <= d + 1 candidates is exact.

struct TreeCover {
  std::vector<NodeId> dominators;
  std::vector<SolveStep> steps;
};

class TreeCoverer {
 public:
  TreeCoverer(const Digraph& g, Hops d) : g_(g), d_(d) {}

  // Covers the component `nodes` viewed as an out-tree hanging from `root`;
  // the edge into `root`, if any, is ignored.
  TreeCover run(std::span<const NodeId> nodes, NodeId root, bool force_root) {
    build_tree(nodes, root);
    covered_.assign(order_.size(), 0);
    TreeCover out;
    const NodeId anchor = nodes.front();

    if (force_root) {
      out.dominators.push_back(root);
      out.steps.push_back(CycleCutStep{anchor, root, 0, cover_from(0)});
    }

    std::vector<std::uint32_t> by_depth(order_.size());
    for (std::uint32_t i = 0; i < by_depth.size(); ++i) by_depth[i] = i;
    std::sort(by_depth.begin(), by_depth.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (depth_[a] != depth_[b]) return depth_[a] > depth_[b];
      return order_[a] < order_[b];
    });

    for (std::uint32_t leaf : by_depth) {
      if (covered_[leaf]) continue;
      std::uint32_t u = leaf;
      for (Hops step = 0; step < d_ && tree_parent_[u] != kNoNode; ++step) u = tree_parent_[u];
      out.dominators.push_back(order_[u]);
      out.steps.push_back(LeafStep{anchor, order_[leaf], order_[u], cover_from(u)});
    }
    return out;
  }

 private:
  void build_tree(std::span<const NodeId> nodes, NodeId root) {
    order_.clear();
    tree_parent_.clear();
    depth_.clear();
    children_begin_.clear();
    order_.push_back(root);
    tree_parent_.push_back(kNoNode);
    depth_.push_back(0);
    // BFS order doubles as the local index; children of local i occupy a
    // contiguous range starting at children_begin_[i].
    for (std::uint32_t head = 0; head < order_.size(); ++head) {
      children_begin_.push_back(static_cast<std::uint32_t>(order_.size()));
      g_.for_each_out_neighbor(order_[head], [&](NodeId w) {
        if (w == root) return;
        order_.push_back(w);
        tree_parent_.push_back(head);
        depth_.push_back(depth_[head] + 1);
      });
    }
    children_begin_.push_back(static_cast<std::uint32_t>(order_.size()));
    if (order_.size() != nodes.size()) {
      throw ComponentDefect("component is not an out-tree below its root");
    }
  }

  // Marks the subtree of local node u down to d hops; returns the nodes that
  // were not covered before, ascending.
  std::vector<NodeId> cover_from(std::uint32_t u) {
    std::vector<NodeId> fresh;
    std::vector<std::pair<std::uint32_t, Hops>> frontier{{u, 0}};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const auto [v, dist] = frontier[head];
      if (!covered_[v]) {
        covered_[v] = 1;
        fresh.push_back(order_[v]);
      }
      if (dist == d_) continue;
      for (std::uint32_t c = children_begin_[v]; c < children_begin_[v + 1]; ++c) {
        frontier.emplace_back(c, dist + 1);
      }
    }
    std::sort(fresh.begin(), fresh.end());
    return fresh;
  }

  const Digraph& g_;
  Hops d_;
  std::vector<NodeId> order_;
  std::vector<std::uint32_t> tree_parent_;
  std::vector<Hops> depth_;
  std::vector<std::uint32_t> children_begin_;
  std::vector<char> covered_;
};

Solution solve_exact(const Digraph& g, Hops d) {
  std::vector<NodeId> members;
  SolveTrace trace;
  TreeCoverer coverer(g, d);
  auto take = [&](TreeCover cover) {
    members.insert(members.end(), cover.dominators.begin(), cover.dominators.end());
    std::move(cover.steps.begin(), cover.steps.end(), std::back_inserter(trace.steps));
  };

  for (const auto& nodes : weakly_connected_components(g)) {
    const Component comp = classify_component(g, nodes);
    switch (comp.kind) {
      case ComponentKind::kPureCycle: {
        CycleStep step = cycle_step(comp, d, CycleMode::kOptimal);
        members.insert(members.end(), step.placed.begin(), step.placed.end());
        trace.steps.push_back(std::move(step));
        break;
      }
      case ComponentKind::kOutTree:
        take(coverer.run(comp.nodes, *comp.root, false));
        break;
      case ComponentKind::kCycleWithTrees: {
        const std::size_t len = comp.cycle.size();
        const std::size_t candidates = std::min(len, std::size_t{d} + 1);
        std::optional<TreeCover> best;
        for (std::size_t back = 0; back < candidates; ++back) {
          const NodeId cut_at = comp.cycle[(len - back) % len];
          TreeCover cover = coverer.run(comp.nodes, cut_at, true);
          if (!best || cover.dominators.size() < best->dominators.size()) best = std::move(cover);
        }
        std::get<CycleCutStep>(best->steps.front()).candidates = candidates;
        take(std::move(*best));
        break;
      }
    }
  }
  return finish(std::move(members), d, std::move(trace));
}

}  // namespace

// ---------------------------------------------------------------------------
// Removal loop.
//
// A fragment keeps its depths while removals only strip subtrees hanging off
// it, so its nodes are visited once in (depth desc, id asc) order and the
// first live one is the farthest leaf. A removal that reaches the cycle
// invalidates the depths; the survivors are re-split and queued again.

Solution solve_greedy_removal(const Digraph& g, Hops d, CycleMode cycle_formula) {
  check_radius(d);
  Digraph work = g;
  std::vector<NodeId> members;
  SolveTrace trace;
  std::vector<char> mark(g.node_count(), 0);
  std::vector<char> on_cycle(g.node_count(), 0);

  auto initial = weakly_connected_components(work);
  std::deque<std::vector<NodeId>> pending(std::make_move_iterator(initial.begin()),
                                          std::make_move_iterator(initial.end()));
  while (!pending.empty()) {
    const std::vector<NodeId> nodes = std::move(pending.front());
    pending.pop_front();
    const Component comp = classify_component(work, nodes);

    if (comp.kind == ComponentKind::kPureCycle) {
      CycleStep step = cycle_step(comp, d, cycle_formula);
      members.insert(members.end(), step.placed.begin(), step.placed.end());
      work.remove_nodes(comp.nodes);
      trace.steps.push_back(std::move(step));
      continue;
    }

    const DepthMap depths = depth_map(work, comp);
    std::vector<std::uint32_t> order(comp.nodes.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (depths.depths()[a] != depths.depths()[b]) return depths.depths()[a] > depths.depths()[b];
      return a < b;
    });
    for (NodeId v : comp.cycle) on_cycle[v] = 1;

    std::size_t remaining = comp.nodes.size();
    for (std::uint32_t idx : order) {
      const NodeId leaf = comp.nodes[idx];
      if (!work.alive(leaf)) continue;
      const NodeId u = pick_dominator(work, leaf, d);
      std::vector<NodeId> covered = covered_set(work, u, d);
      work.remove_nodes(covered);
      remaining -= covered.size();
      members.push_back(u);
      trace.steps.push_back(LeafStep{comp.nodes.front(), leaf, u, std::move(covered)});
      if (remaining == 0) break;

      std::vector<std::vector<NodeId>> requeue;
      if (on_cycle[u]) {
        requeue = live_components(work, comp.nodes, mark);
      } else if (!comp.cycle.empty() && remaining == comp.cycle.size()) {
        requeue.push_back(comp.nodes);
        std::erase_if(requeue.back(), [&](NodeId w) { return !work.alive(w); });
      }
      if (!requeue.empty()) {
        pending.insert(pending.begin(), std::make_move_iterator(requeue.begin()),
                       std::make_move_iterator(requeue.end()));
        break;
      }
    }
    for (NodeId v : comp.cycle) on_cycle[v] = 0;
  }
  return finish(std::move(members), d, std::move(trace));
}

Solution solve(const Digraph& g, const SolveConfig& cfg) {
  check_radius(cfg.d);
  if (cfg.cycle_mode == CycleMode::kPaperLiteral) {
    return solve_greedy_removal(g, cfg.d, CycleMode::kPaperLiteral);
  }
  return solve_exact(g, cfg.d);
}

}  // namespace hopdom
