#ifndef HOPDOM_GENERATOR_HPP
#define HOPDOM_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopdom/graph.hpp"

namespace hopdom {

enum class Shape { kRandom, kPath, kCycle, kStar, kRho, kForest };

std::string_view to_string(Shape shape);
std::optional<Shape> shape_from_string(std::string_view text);

// Parameters of one instance. Only the fields relevant to `shape` are read:
//   Random  p            each node gets a parent with probability p
//   Rho     cycle_length, tree_nodes   (cycle_length + tree_nodes == n)
//   Forest  components   number of out-trees, 1..n
struct GenSpec {
  Shape shape = Shape::kRandom;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double p = 0.85;
  std::size_t cycle_length = 0;
  std::size_t tree_nodes = 0;
  std::size_t components = 1;
};

// Throws std::invalid_argument on inconsistent parameters.
void validate(const GenSpec& spec);

// Edges in generation order. Randomness comes from std::mt19937_64 seeded
// with spec.seed; see README for the exact draw procedure.
std::vector<Edge> generate_edges(const GenSpec& spec);
Digraph generate(const GenSpec& spec);

// '#'-prefixed lines describing the spec, one "# key=value" per field used.
std::string describe(const GenSpec& spec);

struct CorpusEntry {
  GenSpec spec;
  Digraph graph;
};

// Random instances, `per_size` of each size, seed = size * 10000 + index.
std::vector<CorpusEntry> corpus(std::span<const std::size_t> sizes, std::size_t per_size,
                                double p = 0.85);

}  // namespace hopdom

#endif  // HOPDOM_GENERATOR_HPP
