#include "hopdom/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace hopdom {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kOutTree:
      return "OutTree";
    case ComponentKind::kPureCycle:
      return "PureCycle";
    case ComponentKind::kCycleWithTrees:
      return "CycleWithTrees";
  }
  return "?";
}

Hops DepthMap::depth(NodeId v) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) {
    throw std::out_of_range("node " + std::to_string(v) + " is not in this component");
  }
  return depths_[static_cast<std::size_t>(it - nodes_.begin())];
}

Hops DepthMap::max_depth() const {
  return depths_.empty() ? 0 : *std::max_element(depths_.begin(), depths_.end());
}

namespace {

void order_parts(std::vector<std::vector<NodeId>>& parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::size_t index_of(std::span<const NodeId> sorted, NodeId v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) {
    throw ComponentDefect("node " + std::to_string(v) + " escapes its weak component");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

std::vector<std::vector<NodeId>> strongly_connected_components(const Digraph& g) {
  constexpr std::uint32_t kUnvisited = kNoNode;
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  std::vector<std::vector<NodeId>> parts;

  struct Frame {
    NodeId node;
    std::vector<NodeId> next;
    std::size_t pos = 0;
  };
  std::vector<Frame> call_stack;
  std::uint32_t counter = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (!g.alive(root) || index[root] != kUnvisited) continue;
    auto enter = [&](NodeId v) {
      index[v] = lowlink[v] = counter++;
      stack.push_back(v);
      on_stack[v] = 1;
      call_stack.push_back({v, g.out_neighbors(v)});
    };
    enter(root);
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      if (frame.pos < frame.next.size()) {
        const NodeId w = frame.next[frame.pos++];
        if (index[w] == kUnvisited) {
          enter(w);
        } else if (on_stack[w]) {
          lowlink[frame.node] = std::min(lowlink[frame.node], index[w]);
        }
        continue;
      }
      const NodeId v = frame.node;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const NodeId caller = call_stack.back().node;
        lowlink[caller] = std::min(lowlink[caller], lowlink[v]);
      }
      if (lowlink[v] == index[v]) {
        std::vector<NodeId> part;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          part.push_back(w);
        } while (w != v);
        parts.push_back(std::move(part));
      }
    }
  }
  order_parts(parts);
  return parts;
}

std::vector<std::vector<NodeId>> weakly_connected_components(const Digraph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> leader(n);
  std::iota(leader.begin(), leader.end(), NodeId{0});
  auto find = [&](NodeId v) {
    while (leader[v] != v) {
      leader[v] = leader[leader[v]];
      v = leader[v];
    }
    return v;
  };
  for (NodeId v = 0; v < n; ++v) {
    if (!g.alive(v)) continue;
    const NodeId p = g.parent_or_none(v);
    if (p == kNoNode) continue;
    const NodeId a = find(v);
    const NodeId b = find(p);
    if (a != b) leader[std::max(a, b)] = std::min(a, b);
  }
  // Every leader is the smallest id of its set, so visiting v ascending
  // emits parts already ordered by smallest member.
  std::vector<std::vector<NodeId>> parts;
  std::vector<std::uint32_t> slot(n, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    if (!g.alive(v)) continue;
    const NodeId r = find(v);
    if (slot[r] == kNoNode) {
      slot[r] = static_cast<std::uint32_t>(parts.size());
      parts.emplace_back();
    }
    parts[slot[r]].push_back(v);
  }
  return parts;
}

std::optional<std::vector<NodeId>> find_cycle(const Digraph& g, std::span<const NodeId> comp) {
  if (comp.empty()) return std::nullopt;
  std::unordered_map<NodeId, std::size_t> seen;
  std::vector<NodeId> walk;
  NodeId v = *std::min_element(comp.begin(), comp.end());
  g.check_alive(v);
  while (v != kNoNode) {
    if (const auto it = seen.find(v); it != seen.end()) {
      std::vector<NodeId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(it->second), walk.end());
      std::reverse(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      return cycle;
    }
    if (walk.size() > comp.size()) {
      throw ComponentDefect("parent walk left the component");
    }
    seen.emplace(v, walk.size());
    walk.push_back(v);
    v = g.parent_or_none(v);
  }
  return std::nullopt;
}

Component classify_component(const Digraph& g, std::span<const NodeId> comp) {
  Component out;
  out.nodes.assign(comp.begin(), comp.end());
  std::sort(out.nodes.begin(), out.nodes.end());
  if (out.nodes.empty()) throw ComponentDefect("empty component");

  std::vector<NodeId> parentless;
  for (NodeId v : out.nodes) {
    g.check_alive(v);
    if (g.parent_or_none(v) == kNoNode) parentless.push_back(v);
  }
  auto cycle = find_cycle(g, out.nodes);

  if (!cycle) {
    if (parentless.size() != 1) {
      throw ComponentDefect("acyclic component with " + std::to_string(parentless.size()) +
                            " parentless nodes");
    }
    out.kind = ComponentKind::kOutTree;
    out.root = parentless.front();
    return out;
  }
  if (!parentless.empty()) {
    throw ComponentDefect("component holds both a cycle and a parentless node " +
                          std::to_string(parentless.front()));
  }
  out.kind = cycle->size() == out.nodes.size() ? ComponentKind::kPureCycle
                                                : ComponentKind::kCycleWithTrees;
  out.cycle = std::move(*cycle);
  return out;
}

DepthMap depth_map(const Digraph& g, const Component& comp) {
  constexpr Hops kUnset = std::numeric_limits<Hops>::max();
  std::vector<Hops> depth(comp.nodes.size(), kUnset);
  std::vector<NodeId> frontier;
  if (comp.root) {
    frontier.push_back(*comp.root);
  } else {
    frontier = comp.cycle;
  }
  for (NodeId v : frontier) depth[index_of(comp.nodes, v)] = 0;

  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId v = frontier[head];
    const Hops dv = depth[index_of(comp.nodes, v)];
    g.for_each_out_neighbor(v, [&](NodeId w) {
      Hops& dw = depth[index_of(comp.nodes, w)];
      if (dw != kUnset) return;  // cycle node
      dw = dv + 1;
      frontier.push_back(w);
    });
  }
  if (std::find(depth.begin(), depth.end(), kUnset) != depth.end()) {
    throw ComponentDefect("component has nodes unreachable from its root or cycle");
  }
  return DepthMap(comp.nodes, std::move(depth));
}

std::optional<NodeId> farthest_leaf(const Digraph& g, const Component& comp,
                                    const DepthMap& depths) {
  if (comp.kind == ComponentKind::kPureCycle) return std::nullopt;
  std::optional<NodeId> best;
  Hops best_depth = 0;
  for (std::size_t i = 0; i < comp.nodes.size(); ++i) {
    const NodeId v = comp.nodes[i];
    bool leaf = true;
    g.for_each_out_neighbor(v, [&](NodeId) { leaf = false; });
    if (!leaf) continue;
    const Hops dv = depths.depths()[i];
    if (!best || dv > best_depth) {
      best = v;
      best_depth = dv;
    }
  }
  return best;
}

std::optional<NodeId> farthest_leaf(const Digraph& g, const Component& comp) {
  if (comp.kind == ComponentKind::kPureCycle) return std::nullopt;
  return farthest_leaf(g, comp, depth_map(g, comp));
}

}  // namespace hopdom
