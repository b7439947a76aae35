#ifndef HOPDOM_DECOMPOSITION_HPP
#define HOPDOM_DECOMPOSITION_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hopdom/graph.hpp"

namespace hopdom {

enum class ComponentKind { kOutTree, kPureCycle, kCycleWithTrees };

std::string_view to_string(ComponentKind kind);

// One weakly connected piece of the live graph.
struct Component {
  std::vector<NodeId> nodes;  // ascending
  ComponentKind kind = ComponentKind::kOutTree;
  std::vector<NodeId> cycle;  // in edge direction, starting at its smallest id
  std::optional<NodeId> root;  // OutTree only

  NodeId anchor() const { return root ? *root : cycle.front(); }
};

// Hop depth of every node of a component: from the root for an out-tree,
// from the nearest cycle node otherwise. Entries follow Component::nodes.
class DepthMap {
 public:
  DepthMap(std::vector<NodeId> nodes, std::vector<Hops> depths)
      : nodes_(std::move(nodes)), depths_(std::move(depths)) {}

  std::span<const NodeId> nodes() const { return nodes_; }
  std::span<const Hops> depths() const { return depths_; }
  // Throws std::out_of_range if v is not in the component.
  Hops depth(NodeId v) const;
  Hops max_depth() const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<Hops> depths_;
};

// Raised when a component contradicts the indegree <= 1 structure. A valid
// Digraph never produces one; seeing it means a bug, not bad input.
class ComponentDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Tarjan's algorithm over live nodes. Each part is ascending; parts are
// ordered by their smallest member.
std::vector<std::vector<NodeId>> strongly_connected_components(const Digraph& g);

// Union-find over live edges. Same ordering guarantees as above.
std::vector<std::vector<NodeId>> weakly_connected_components(const Digraph& g);

// The unique directed cycle of a weak component, if any, starting from its
// smallest id and following edge direction.
std::optional<std::vector<NodeId>> find_cycle(const Digraph& g, std::span<const NodeId> comp);

Component classify_component(const Digraph& g, std::span<const NodeId> comp);

DepthMap depth_map(const Digraph& g, const Component& comp);

// Deepest node without live out-edges, smallest id on ties. Empty for a pure
// cycle. An isolated node counts as its own leaf.
std::optional<NodeId> farthest_leaf(const Digraph& g, const Component& comp);
std::optional<NodeId> farthest_leaf(const Digraph& g, const Component& comp,
                                    const DepthMap& depths);

}  // namespace hopdom

#endif  // HOPDOM_DECOMPOSITION_HPP
