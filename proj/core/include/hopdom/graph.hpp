#ifndef HOPDOM_GRAPH_HPP
#define HOPDOM_GRAPH_HPP

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopdom {

using NodeId = std::uint32_t;
using Hops = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

enum class GraphErrorKind {
  kIndegreeViolation,
  kDuplicateEdge,
  kNodeOutOfRange,
  kNodeRemoved,
  kParseError,
};

// Thrown for any invalid graph input or invalid node reference. The fields
// that do not apply to a given kind are left at their defaults.
class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, std::string message, NodeId node = kNoNode,
             NodeId other = kNoNode, std::size_t line = 0);

  static GraphError IndegreeViolation(NodeId node);
  static GraphError DuplicateEdge(NodeId u, NodeId v);
  static GraphError NodeOutOfRange(std::uint64_t id, std::size_t n, std::size_t line = 0);
  static GraphError NodeRemoved(NodeId node);
  static GraphError ParseError(std::size_t line, const std::string& message);

  GraphErrorKind kind() const { return kind_; }
  NodeId node() const { return node_; }
  NodeId other() const { return other_; }
  // 1-based input line, or 0 when the error did not come from parsing.
  std::size_t line() const { return line_; }

 private:
  GraphErrorKind kind_;
  NodeId node_;
  NodeId other_;
  std::size_t line_;
};

// Directed graph in which every node has at most one incoming edge.
//
// Node ids are dense in [0, n). Removal is logical: a removed node keeps its
// id but disappears from every query, together with its incident edges.
// A self-loop (v, v) makes v its own parent and its own out-neighbor.
class Digraph {
 public:
  Digraph() = default;

  std::size_t node_count() const { return parent_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  // Number of edges whose endpoints are both alive.
  std::size_t edge_count() const;

  bool contains(NodeId v) const { return v < node_count(); }
  bool alive(NodeId v) const { return contains(v) && alive_[v] != 0; }

  // Throws GraphError unless v is a live node of this graph.
  void check_alive(NodeId v) const;

  std::optional<NodeId> parent(NodeId v) const;
  std::vector<NodeId> out_neighbors(NodeId v) const;

  // Unchecked accessors for hot loops; v must be alive.
  NodeId parent_or_none(NodeId v) const {
    const NodeId p = parent_[v];
    return (p != kNoNode && alive_[p]) ? p : kNoNode;
  }
  template <class F>
  void for_each_out_neighbor(NodeId v, F&& f) const {
    for (std::uint32_t i = child_begin_[v]; i < child_begin_[v + 1]; ++i) {
      const NodeId w = children_[i];
      if (alive_[w]) f(w);
    }
  }

  std::vector<NodeId> alive_nodes() const;
  // Live edges sorted by (u, v).
  std::vector<Edge> edges() const;

  // Marks every node of `nodes` dead. All ids are validated before anything
  // is modified, so a failing call leaves the graph untouched.
  void remove_nodes(std::span<const NodeId> nodes);

  // Recomputes the structural invariants from scratch; returns an empty
  // string when they hold, else a description of the first violation.
  std::string check_invariants() const;

  friend Digraph build_graph(std::size_t n, std::span<const Edge> edges);

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> child_begin_{0};
  std::vector<NodeId> children_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
};

// Validates and builds a graph; edge (u, v) means u dominates v.
Digraph build_graph(std::size_t n, std::span<const Edge> edges);

// Reads the edge-list text format:
//   # optional comment lines
//   n m
//   u v        (exactly m lines)
Digraph parse_graph(std::istream& in);
Digraph parse_graph_string(const std::string& text);

// Writes the live subgraph in the edge-list format with edges sorted by
// (u, v). Removed nodes still occupy ids, so n is node_count().
std::string serialize_graph(const Digraph& g);

// All live nodes at directed distance <= d from u, u included, ascending.
std::vector<NodeId> reachable_within(const Digraph& g, NodeId u, Hops d);

}  // namespace hopdom

#endif  // HOPDOM_GRAPH_HPP
