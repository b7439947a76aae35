#include "hopdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <string_view>

namespace hopdom {

GraphError::GraphError(GraphErrorKind kind, std::string message, NodeId node, NodeId other,
                       std::size_t line)
    : std::runtime_error(std::move(message)), kind_(kind), node_(node), other_(other), line_(line) {}

GraphError GraphError::IndegreeViolation(NodeId node) {
  return {GraphErrorKind::kIndegreeViolation,
          "indegree violation: node " + std::to_string(node) + " has more than one incoming edge",
          node};
}

GraphError GraphError::DuplicateEdge(NodeId u, NodeId v) {
  return {GraphErrorKind::kDuplicateEdge,
          "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")", u, v};
}

GraphError GraphError::NodeOutOfRange(std::uint64_t id, std::size_t n, std::size_t line) {
  std::string msg = "node id " + std::to_string(id) + " out of range for " + std::to_string(n) +
                    " nodes";
  if (line != 0) msg = "line " + std::to_string(line) + ": " + msg;
  const NodeId node = id < kNoNode ? static_cast<NodeId>(id) : kNoNode;
  return {GraphErrorKind::kNodeOutOfRange, std::move(msg), node, kNoNode, line};
}

GraphError GraphError::NodeRemoved(NodeId node) {
  return {GraphErrorKind::kNodeRemoved, "node " + std::to_string(node) + " has been removed",
          node};
}

GraphError GraphError::ParseError(std::size_t line, const std::string& message) {
  return {GraphErrorKind::kParseError, "line " + std::to_string(line) + ": " + message, kNoNode,
          kNoNode, line};
}

// ---------------------------------------------------------------------------
// Digraph

std::size_t Digraph::edge_count() const {
  std::size_t m = 0;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (alive_[v] && parent_or_none(v) != kNoNode) ++m;
  }
  return m;
}

void Digraph::check_alive(NodeId v) const {
  if (!contains(v)) throw GraphError::NodeOutOfRange(v, node_count());
  if (!alive_[v]) throw GraphError::NodeRemoved(v);
}

std::optional<NodeId> Digraph::parent(NodeId v) const {
  check_alive(v);
  const NodeId p = parent_or_none(v);
  if (p == kNoNode) return std::nullopt;
  return p;
}

std::vector<NodeId> Digraph::out_neighbors(NodeId v) const {
  check_alive(v);
  std::vector<NodeId> out;
  for_each_out_neighbor(v, [&](NodeId w) { out.push_back(w); });
  return out;
}

std::vector<NodeId> Digraph::alive_nodes() const {
  std::vector<NodeId> out;
  out.reserve(alive_count_);
  for (NodeId v = 0; v < node_count(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  for (NodeId u = 0; u < node_count(); ++u) {
    if (!alive_[u]) continue;
    for_each_out_neighbor(u, [&](NodeId v) { out.emplace_back(u, v); });
  }
  return out;
}

void Digraph::remove_nodes(std::span<const NodeId> nodes) {
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (NodeId v : sorted) check_alive(v);
  for (NodeId v : sorted) alive_[v] = 0;
  alive_count_ -= sorted.size();
}

std::string Digraph::check_invariants() const {
  std::vector<std::uint32_t> indegree(node_count(), 0);
  for (NodeId u = 0; u < node_count(); ++u) {
    if (!alive_[u]) continue;
    NodeId previous = kNoNode;
    for (std::uint32_t i = child_begin_[u]; i < child_begin_[u + 1]; ++i) {
      const NodeId v = children_[i];
      if (previous != kNoNode && v <= previous) {
        return "out-neighbors of " + std::to_string(u) + " not strictly ascending";
      }
      previous = v;
      if (parent_[v] != u) {
        return "node " + std::to_string(v) + " listed under " + std::to_string(u) +
               " but its parent record differs";
      }
      if (alive_[v]) ++indegree[v];
    }
  }
  std::size_t live = 0;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (!alive_[v]) continue;
    ++live;
    if (indegree[v] > 1) return "node " + std::to_string(v) + " has indegree > 1";
    const bool has_parent = parent_or_none(v) != kNoNode;
    if (has_parent != (indegree[v] == 1)) {
      return "parent record of node " + std::to_string(v) + " disagrees with edge lists";
    }
  }
  if (live != alive_count_) return "alive count out of sync";
  return {};
}

Digraph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n >= kNoNode) throw GraphError::NodeOutOfRange(n, kNoNode);
  Digraph g;
  g.parent_.assign(n, kNoNode);
  for (const auto& [u, v] : edges) {
    if (u >= n) throw GraphError::NodeOutOfRange(u, n);
    if (v >= n) throw GraphError::NodeOutOfRange(v, n);
    if (g.parent_[v] != kNoNode) {
      if (g.parent_[v] == u) throw GraphError::DuplicateEdge(u, v);
      throw GraphError::IndegreeViolation(v);
    }
    g.parent_[v] = u;
  }
  // Counting sort of children by parent; iterating v ascending keeps every
  // child list sorted.
  g.child_begin_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (g.parent_[v] != kNoNode) ++g.child_begin_[g.parent_[v] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.child_begin_[i + 1] += g.child_begin_[i];
  g.children_.resize(edges.size());
  std::vector<std::uint32_t> cursor(g.child_begin_.begin(), g.child_begin_.end() - 1);
  for (NodeId v = 0; v < n; ++v) {
    if (g.parent_[v] != kNoNode) g.children_[cursor[g.parent_[v]]++] = v;
  }
  g.alive_.assign(n, 1);
  g.alive_count_ = n;
  return g;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw GraphError::ParseError(line, "expected a non-negative integer, got '" +
                                           std::string(token) + "'");
  }
  return value;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Digraph parse_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::vector<NodeId> parent;

  while (std::getline(in, text)) {
    ++line_no;
    if (skippable(text)) continue;
    const auto tokens = split_tokens(text);
    if (tokens.size() != 2) {
      throw GraphError::ParseError(line_no, "expected two integers, got " +
                                                std::to_string(tokens.size()) + " tokens");
    }
    const std::uint64_t a = parse_uint(tokens[0], line_no);
    const std::uint64_t b = parse_uint(tokens[1], line_no);
    if (!header) {
      if (a >= kNoNode) throw GraphError::ParseError(line_no, "node count too large");
      header.emplace(a, b);
      parent.assign(a, kNoNode);
      continue;
    }
    const auto [n, m] = *header;
    if (edges.size() == m) {
      throw GraphError::ParseError(line_no, "more than the declared " + std::to_string(m) +
                                                " edge lines");
    }
    if (a >= n) throw GraphError::NodeOutOfRange(a, n, line_no);
    if (b >= n) throw GraphError::NodeOutOfRange(b, n, line_no);
    const auto u = static_cast<NodeId>(a);
    const auto v = static_cast<NodeId>(b);
    if (parent[v] != kNoNode) {
      GraphError inner = parent[v] == u ? GraphError::DuplicateEdge(u, v)
                                        : GraphError::IndegreeViolation(v);
      throw GraphError(inner.kind(), "line " + std::to_string(line_no) + ": " + inner.what(),
                       inner.node(), inner.other(), line_no);
    }
    parent[v] = u;
    edges.emplace_back(u, v);
  }
  if (!header) throw GraphError::ParseError(line_no + 1, "missing 'n m' header line");
  if (edges.size() != header->second) {
    throw GraphError::ParseError(line_no + 1, "expected " + std::to_string(header->second) +
                                                  " edge lines, found " +
                                                  std::to_string(edges.size()));
  }
  return build_graph(header->first, edges);
}

Digraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const Digraph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.node_count()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<NodeId> reachable_within(const Digraph& g, NodeId u, Hops d) {
  g.check_alive(u);
  // With indegree <= 1 the path from u to any node is unique, so the only
  // node a search can re-enter is u itself (through a cycle).
  std::vector<NodeId> out{u};
  std::deque<std::pair<NodeId, Hops>> queue{{u, 0}};
  while (!queue.empty()) {
    const auto [v, dist] = queue.front();
    queue.pop_front();
    if (dist == d) continue;
    g.for_each_out_neighbor(v, [&](NodeId w) {
      if (w == u) return;
      out.push_back(w);
      queue.emplace_back(w, dist + 1);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hopdom
