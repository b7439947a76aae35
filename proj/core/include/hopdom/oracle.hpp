#ifndef HOPDOM_ORACLE_HPP
#define HOPDOM_ORACLE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hopdom/graph.hpp"
#include "hopdom/solver.hpp"

namespace hopdom {

struct VerifyReport {
  bool valid = false;
  std::vector<NodeId> uncovered;  // ascending; empty iff valid
};

// Checks that every live node lies within d hops of some member of `set`.
// Members cover themselves. Throws GraphError on ids that are out of range
// or removed, std::invalid_argument when d == 0.
VerifyReport verify(const Digraph& g, std::span<const NodeId> set, Hops d);

inline constexpr std::size_t kDefaultOracleCap = 20;
inline constexpr std::size_t kMaxOracleCap = 64;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t alive, std::size_t cap);

  std::size_t alive() const { return alive_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t alive_;
  std::size_t cap_;
};

// Exact minimum by enumerating subsets of live nodes in increasing size,
// each size in lexicographic order; the witness is the first feasible one.
// Throws CapExceeded when the graph has more than `cap` live nodes.
Solution brute_force_min(const Digraph& g, Hops d, std::size_t cap = kDefaultOracleCap);

}  // namespace hopdom

#endif  // HOPDOM_ORACLE_HPP
