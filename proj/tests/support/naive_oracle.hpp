#ifndef HOPDOM_TESTS_NAIVE_ORACLE_HPP
#define HOPDOM_TESTS_NAIVE_ORACLE_HPP

// Test-only ground truth that shares no code with the library beyond the edge
// list: all-pairs hop distances by Floyd-Warshall, then every subset of the
// nodes checked against them.

#include <bit>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace hopdom::testing {

inline std::vector<std::vector<std::uint32_t>> hop_distances(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;
  std::vector<std::vector<std::uint32_t>> dist(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
  for (const auto& [u, v] : edges) {
    if (u != v) dist[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
      }
    }
  }
  return dist;
}

inline bool naive_dominates(const std::vector<std::vector<std::uint32_t>>& dist,
                            std::uint32_t mask, std::uint32_t d) {
  const std::size_t n = dist.size();
  for (std::size_t v = 0; v < n; ++v) {
    bool hit = false;
    for (std::size_t u = 0; u < n && !hit; ++u) {
      if ((mask >> u) & 1U) hit = dist[u][v] <= d;
    }
    if (!hit) return false;
  }
  return true;
}

// Minimum dominating set size over all 2^n subsets; n must be small (<= 20).
inline std::size_t naive_min(std::size_t n,
                             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                             std::uint32_t d) {
  const auto dist = hop_distances(n, edges);
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best && naive_dominates(dist, mask, d)) best = size;
  }
  return best;
}

}  // namespace hopdom::testing

#endif  // HOPDOM_TESTS_NAIVE_ORACLE_HPP
