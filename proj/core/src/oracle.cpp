#include "hopdom/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace hopdom {

CapExceeded::CapExceeded(std::size_t alive, std::size_t cap)
    : std::runtime_error("oracle cap exceeded: " + std::to_string(alive) + " live nodes > cap " +
                         std::to_string(cap)),
      alive_(alive),
      cap_(cap) {}

VerifyReport verify(const Digraph& g, std::span<const NodeId> set, Hops d) {
  if (d == 0) throw std::invalid_argument("hop radius d must be >= 1");
  for (NodeId u : set) g.check_alive(u);
  std::vector<char> covered(g.node_count(), 0);
  for (NodeId u : set) {
    for (NodeId w : reachable_within(g, u, d)) covered[w] = 1;
  }
  VerifyReport report;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.alive(v) && !covered[v]) report.uncovered.push_back(v);
  }
  report.valid = report.uncovered.empty();
  return report;
}

Solution brute_force_min(const Digraph& g, Hops d, std::size_t cap) {
  if (d == 0) throw std::invalid_argument("hop radius d must be >= 1");
  if (cap > kMaxOracleCap) {
    throw std::invalid_argument("oracle cap must be <= " + std::to_string(kMaxOracleCap));
  }
  const std::vector<NodeId> nodes = g.alive_nodes();
  const std::size_t m = nodes.size();
  if (m > cap) throw CapExceeded(m, cap);

  // Coverage of each candidate as a bitmask over positions in `nodes`.
  std::vector<std::uint64_t> reach(m, 0);
  std::size_t widest = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const auto covered = reachable_within(g, nodes[i], d);
    widest = std::max(widest, covered.size());
    for (NodeId w : covered) {
      const auto pos = std::lower_bound(nodes.begin(), nodes.end(), w) - nodes.begin();
      reach[i] |= std::uint64_t{1} << pos;
    }
  }
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

  std::uint64_t checked = 0;
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= m; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      ++checked;
      std::uint64_t mask = 0;
      for (std::size_t i : pick) mask |= reach[i];
      if (mask == full) {
        std::vector<NodeId> witness;
        for (std::size_t i : pick) witness.push_back(nodes[i]);
        if (!verify(g, witness, d).valid) {
          throw std::logic_error("oracle witness failed verification");
        }
        // Each dominator covers at most `widest` nodes.
        if (k * widest < m) throw std::logic_error("oracle result below the coverage floor");
        SolveTrace trace;
        trace.steps.push_back(ExhaustiveStep{witness, checked, nodes});
        return {DominatingSet{std::move(witness), d}, std::move(trace)};
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("no dominating set found; the full node set always dominates");
}

}  // namespace hopdom
