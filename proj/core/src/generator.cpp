#include "hopdom/generator.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hopdom {

namespace {

// Unbiased draw in [0, bound) by rejecting the low 2^64 mod bound outputs.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

// Top 53 bits as a double in [0, 1).
double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

NodeId id(std::size_t v) { return static_cast<NodeId>(v); }

}  // namespace

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::kRandom:
      return "random";
    case Shape::kPath:
      return "path";
    case Shape::kCycle:
      return "cycle";
    case Shape::kStar:
      return "star";
    case Shape::kRho:
      return "rho";
    case Shape::kForest:
      return "forest";
  }
  return "?";
}

std::optional<Shape> shape_from_string(std::string_view text) {
  for (Shape s : {Shape::kRandom, Shape::kPath, Shape::kCycle, Shape::kStar, Shape::kRho,
                  Shape::kForest}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

void validate(const GenSpec& spec) {
  if (spec.n >= kNoNode) throw std::invalid_argument("node count too large");
  switch (spec.shape) {
    case Shape::kRandom:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw std::invalid_argument("random: p must lie in [0, 1]");
      }
      break;
    case Shape::kRho:
      if (spec.cycle_length < 1) throw std::invalid_argument("rho: cycle length must be >= 1");
      if (spec.cycle_length + spec.tree_nodes != spec.n) {
        throw std::invalid_argument("rho: cycle length + tree nodes must equal n");
      }
      break;
    case Shape::kForest:
      if (spec.n > 0 && (spec.components < 1 || spec.components > spec.n)) {
        throw std::invalid_argument("forest: components must lie in [1, n]");
      }
      break;
    default:
      break;
  }
}

std::vector<Edge> generate_edges(const GenSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  switch (spec.shape) {
    case Shape::kRandom:
      for (std::size_t v = 0; v < n; ++v) {
        if (draw_unit(rng) < spec.p) edges.emplace_back(id(draw_below(rng, n)), id(v));
      }
      break;
    case Shape::kPath:
      for (std::size_t v = 1; v < n; ++v) edges.emplace_back(id(v - 1), id(v));
      break;
    case Shape::kCycle:
      for (std::size_t v = 0; v < n; ++v) edges.emplace_back(id(v), id((v + 1) % n));
      break;
    case Shape::kStar:
      for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, id(v));
      break;
    case Shape::kRho: {
      const std::size_t c = spec.cycle_length;
      for (std::size_t v = 0; v < c; ++v) edges.emplace_back(id(v), id((v + 1) % c));
      for (std::size_t v = c; v < n; ++v) edges.emplace_back(id(draw_below(rng, v)), id(v));
      break;
    }
    case Shape::kForest:
      for (std::size_t v = spec.components; v < n; ++v) {
        edges.emplace_back(id(draw_below(rng, v)), id(v));
      }
      break;
  }
  return edges;
}

Digraph generate(const GenSpec& spec) {
  const auto edges = generate_edges(spec);
  return build_graph(spec.n, edges);
}

std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  out << "# shape=" << to_string(spec.shape) << "\n# n=" << spec.n << "\n# seed=" << spec.seed
      << "\n";
  switch (spec.shape) {
    case Shape::kRandom:
      out << "# p=" << spec.p << "\n";
      break;
    case Shape::kRho:
      out << "# cycle_length=" << spec.cycle_length << "\n# tree_nodes=" << spec.tree_nodes
          << "\n";
      break;
    case Shape::kForest:
      out << "# components=" << spec.components << "\n";
      break;
    default:
      break;
  }
  return out.str();
}

std::vector<CorpusEntry> corpus(std::span<const std::size_t> sizes, std::size_t per_size,
                                double p) {
  std::vector<CorpusEntry> out;
  out.reserve(sizes.size() * per_size);
  for (std::size_t n : sizes) {
    for (std::size_t i = 0; i < per_size; ++i) {
      GenSpec spec;
      spec.shape = Shape::kRandom;
      spec.n = n;
      spec.p = p;
      spec.seed = static_cast<std::uint64_t>(n) * 10000 + i;
      out.push_back({spec, generate(spec)});
    }
  }
  return out;
}

}  // namespace hopdom
