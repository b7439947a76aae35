#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hopdom/hopdom.hpp"
#include "json.hpp"

namespace hopdom::cli {

namespace {

using nlohmann::json;

// Input problems that end the invocation with kExitUsage.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string join(std::span<const NodeId> ids, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

template <class T>
std::vector<T> parse_csv(const std::string& text, const std::string& flag) {
  std::vector<T> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() ||
        value > std::numeric_limits<T>::max()) {
      throw InputError(flag + ": '" + token + "' is not a valid non-negative integer");
    }
    values.push_back(static_cast<T>(value));
  }
  return values;
}

json step_json(const SolveStep& step) {
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, LeafStep>) {
          return {{"type", "leaf"}, {"anchor", s.anchor}, {"leaf", s.leaf},
                  {"dominator", s.dominator}, {"covered", s.covered}};
        } else if constexpr (std::is_same_v<S, CycleStep>) {
          return {{"type", "cycle"}, {"cycle_length", s.cycle_length}, {"placed", s.placed},
                  {"covered", s.covered}};
        } else if constexpr (std::is_same_v<S, CycleCutStep>) {
          return {{"type", "cut"}, {"anchor", s.anchor}, {"dominator", s.dominator},
                  {"candidates", s.candidates}, {"covered", s.covered}};
        } else {
          return {{"type", "exhaustive"}, {"witness", s.witness},
                  {"subsets_checked", s.subsets_checked}, {"covered", s.covered}};
        }
      },
      step);
}

std::string step_line(const SolveStep& step) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        const std::string covered = " covered=" + join(s.covered, ',');
        if constexpr (std::is_same_v<S, LeafStep>) {
          return "leaf anchor=" + std::to_string(s.anchor) + " leaf=" + std::to_string(s.leaf) +
                 " dominator=" + std::to_string(s.dominator) + covered;
        } else if constexpr (std::is_same_v<S, CycleStep>) {
          return "cycle length=" + std::to_string(s.cycle_length) +
                 " placed=" + join(s.placed, ',') + covered;
        } else if constexpr (std::is_same_v<S, CycleCutStep>) {
          return "cut anchor=" + std::to_string(s.anchor) +
                 " dominator=" + std::to_string(s.dominator) +
                 " candidates=" + std::to_string(s.candidates) + covered;
        } else {
          return "exhaustive witness=" + join(s.witness, ',') +
                 " subsets_checked=" + std::to_string(s.subsets_checked) + covered;
        }
      },
      step);
}

void print_set(std::ostream& out, const DominatingSet& set) {
  out << "k=" << set.size() << "\n" << join(set.members, ' ') << "\n";
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  Hops d = 0;
  std::string mode = "optimal";
  bool trace = false;
  bool json = false;
  std::string file;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  const CycleMode mode = *cycle_mode_from_string(a.mode);
  const Solution sol = solve(g, {a.d, mode});
  if (a.json) {
    json steps = json::array();
    for (const auto& step : sol.trace.steps) steps.push_back(step_json(step));
    json doc = {{"command", "solve"}, {"d", a.d},          {"mode", a.mode},
                {"k", sol.set.size()}, {"members", sol.set.members}, {"trace", steps}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  print_set(out, sol.set);
  if (a.trace) {
    for (std::size_t i = 0; i < sol.trace.steps.size(); ++i) {
      out << "step " << i + 1 << " " << step_line(sol.trace.steps[i]) << "\n";
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  Hops d = 0;
  std::string set;
  bool json = false;
  std::string file;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  const auto members = parse_csv<NodeId>(a.set, "--set");
  VerifyReport report;
  try {
    report = verify(g, members, a.d);
  } catch (const GraphError& e) {
    throw InputError(std::string("--set: ") + e.what());
  }
  if (a.json) {
    json doc = {{"command", "verify"}, {"d", a.d},
                {"valid", report.valid}, {"members", members},
                {"k", members.size()},  {"uncovered", report.uncovered}};
    out << doc.dump(2) << "\n";
  } else if (report.valid) {
    out << "valid\n";
  } else {
    out << "invalid\nuncovered=" << join(report.uncovered, ',') << "\n";
  }
  return report.valid ? kExitOk : kExitInvalid;
}

struct OracleArgs {
  Hops d = 0;
  std::size_t cap = kDefaultOracleCap;
  bool json = false;
  std::string file;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  Solution sol;
  try {
    sol = brute_force_min(g, a.d, a.cap);
  } catch (const CapExceeded& e) {
    throw InputError(a.file + ": " + e.what());
  }
  if (a.json) {
    const auto& step = std::get<ExhaustiveStep>(sol.trace.steps.front());
    json doc = {{"command", "oracle"},
                {"d", a.d},
                {"mode", "exhaustive"},
                {"k", sol.set.size()},
                {"members", sol.set.members},
                {"subsets_checked", step.subsets_checked}};
    out << doc.dump(2) << "\n";
  } else {
    print_set(out, sol.set);
  }
  return kExitOk;
}

struct CompareArgs {
  Hops d = 0;
  std::size_t cap = kDefaultOracleCap;
  std::string mode = "optimal";
  std::string file;
  std::string corpus_sizes;
  std::size_t count = 10;
  double p = 0.85;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  if (a.file.empty() == a.corpus_sizes.empty()) {
    throw InputError("compare: give exactly one of <file> or --corpus");
  }
  const CycleMode mode = *cycle_mode_from_string(a.mode);

  std::vector<std::pair<std::string, Digraph>> instances;
  if (!a.file.empty()) {
    instances.emplace_back(a.file, load_graph(a.file));
    if (instances.front().second.alive_count() > a.cap) {
      throw InputError(a.file + ": " + CapExceeded(instances.front().second.alive_count(), a.cap).what());
    }
  } else {
    if (!(a.p >= 0.0 && a.p <= 1.0)) throw InputError("--p must lie in [0, 1]");
    const auto sizes = parse_csv<std::size_t>(a.corpus_sizes, "--corpus");
    for (auto& entry : corpus(sizes, a.count, a.p)) {
      instances.emplace_back("random-n" + std::to_string(entry.spec.n) + "-s" +
                                 std::to_string(entry.spec.seed),
                             std::move(entry.graph));
    }
  }

  std::size_t matches = 0, mismatches = 0, skipped = 0;
  for (const auto& [name, g] : instances) {
    const Solution sol = solve(g, {a.d, mode});
    const bool valid = verify(g, sol.set.members, a.d).valid;
    out << name << " solver=" << sol.set.size();
    if (g.alive_count() > a.cap) {
      ++skipped;
      out << " oracle=skipped " << (valid ? "valid" : "INVALID") << "\n";
      if (!valid) ++mismatches;
      continue;
    }
    const std::size_t best = brute_force_min(g, a.d, a.cap).set.size();
    out << " oracle=" << best;
    if (valid && sol.set.size() == best) {
      ++matches;
      out << " match\n";
    } else {
      ++mismatches;
      out << (valid ? " MISMATCH\n" : " INVALID\n");
    }
  }
  out << "instances=" << instances.size() << " matches=" << matches
      << " mismatches=" << mismatches << " skipped=" << skipped << "\n";
  return mismatches == 0 ? kExitOk : kExitInvalid;
}

int cmd_decompose(const std::string& file, std::ostream& out) {
  const Digraph g = load_graph(file);
  for (const auto& nodes : weakly_connected_components(g)) {
    const Component comp = classify_component(g, nodes);
    out << "kind=" << to_string(comp.kind) << " size=" << comp.nodes.size()
        << " cycle_length=" << comp.cycle.size() << " anchor=" << comp.anchor();
    if (const auto leaf = farthest_leaf(g, comp)) {
      out << " leaf=" << *leaf << " leaf_depth=" << depth_map(g, comp).depth(*leaf) << "\n";
    } else {
      out << " leaf=- leaf_depth=-\n";
    }
  }
  return kExitOk;
}

struct ShapeArgs {
  std::string shape;
  double p = 0.85;
  std::optional<std::size_t> cycle_length;
  std::optional<std::size_t> components;
};

GenSpec make_spec(const ShapeArgs& a, std::size_t n, std::uint64_t seed) {
  GenSpec spec;
  spec.shape = *shape_from_string(a.shape);
  spec.n = n;
  spec.seed = seed;
  spec.p = a.p;
  if (spec.shape == Shape::kRho) {
    spec.cycle_length = a.cycle_length.value_or(std::max<std::size_t>(1, n / 4));
    if (spec.cycle_length > n) throw InputError("--cycle-length exceeds -n");
    spec.tree_nodes = n - spec.cycle_length;
  }
  if (spec.shape == Shape::kForest) {
    spec.components = a.components.value_or(std::max<std::size_t>(1, n / 100));
  }
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return spec;
}

struct GenArgs {
  ShapeArgs shape;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const GenSpec spec = make_spec(a.shape, a.n, a.seed);
  const std::string text = describe(spec) + serialize_graph(generate(spec));
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream file(a.output);
    if (!file) throw InputError("cannot write '" + a.output + "'");
    file << text;
  }
  return kExitOk;
}

struct BenchArgs {
  ShapeArgs shape;
  std::string sizes;
  std::size_t trials = 1;
  Hops d = 3;
  std::string mode = "optimal";
  std::string csv;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto sizes = parse_csv<std::size_t>(a.sizes, "--sizes");
  const CycleMode mode = *cycle_mode_from_string(a.mode);
  std::ofstream csv;
  if (!a.csv.empty()) {
    csv.open(a.csv);
    if (!csv) throw InputError("cannot write '" + a.csv + "'");
    csv << "shape,n,d,trial,k,seconds\n";
  }
  out << "shape,n,d,trial,k\n";
  std::map<std::size_t, double> fastest;
  for (std::size_t n : sizes) {
    for (std::size_t trial = 0; trial < a.trials; ++trial) {
      const GenSpec spec = make_spec(a.shape, n, static_cast<std::uint64_t>(n) * 10000 + trial);
      const Digraph g = generate(spec);
      const auto start = std::chrono::steady_clock::now();
      const Solution sol = solve(g, {a.d, mode});
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      const std::string row = a.shape.shape + "," + std::to_string(n) + "," +
                              std::to_string(a.d) + "," + std::to_string(trial) + "," +
                              std::to_string(sol.set.size());
      out << row << "\n";
      err << row << "," << elapsed.count() << "\n";
      if (csv) csv << row << "," << elapsed.count() << "\n";
      auto [it, inserted] = fastest.emplace(n, elapsed.count());
      if (!inserted) it->second = std::min(it->second, elapsed.count());
    }
  }
  if (fastest.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, t] : fastest) {
      const double x = std::log(static_cast<double>(n));
      const double y = std::log(std::max(t, 1e-9));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double k = static_cast<double>(fastest.size());
    err << "log-log slope=" << (k * sxy - sx * sy) / (k * sxx - sx * sx) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum d-hop dominating sets for graphs with indegree at most one", "hopdom"};
  app.require_subcommand(1);

  const auto radius = CLI::Range(Hops{1}, std::numeric_limits<Hops>::max());
  const auto modes = CLI::IsMember({"optimal", "paper"});
  const auto shapes = CLI::IsMember({"random", "path", "cycle", "star", "rho", "forest"});

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum d-hop dominating set");
  solve_cmd->add_option("-d", solve_args.d, "Hop radius")->required()->check(radius);
  solve_cmd->add_option("--cycle-mode", solve_args.mode, "optimal|paper")->check(modes);
  solve_cmd->add_flag("--trace", solve_args.trace, "Print every greedy decision");
  solve_cmd->add_flag("--json", solve_args.json, "Emit one JSON document");
  solve_cmd->add_option("file", solve_args.file, "Graph file")->required();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate dominating set");
  verify_cmd->add_option("-d", verify_args.d, "Hop radius")->required()->check(radius);
  verify_cmd->add_option("--set", verify_args.set, "Comma-separated node ids")->required();
  verify_cmd->add_flag("--json", verify_args.json, "Emit one JSON document");
  verify_cmd->add_option("file", verify_args.file, "Graph file")->required();

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum by exhaustive search");
  oracle_cmd->add_option("-d", oracle_args.d, "Hop radius")->required()->check(radius);
  oracle_cmd->add_option("--cap", oracle_args.cap, "Maximum live nodes")
      ->check(CLI::Range(std::size_t{0}, kMaxOracleCap));
  oracle_cmd->add_flag("--json", oracle_args.json, "Emit one JSON document");
  oracle_cmd->add_option("file", oracle_args.file, "Graph file")->required();

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "Run solver and oracle side by side");
  compare_cmd->add_option("-d", compare_args.d, "Hop radius")->required()->check(radius);
  compare_cmd->add_option("--cap", compare_args.cap, "Maximum live nodes for the oracle")
      ->check(CLI::Range(std::size_t{0}, kMaxOracleCap));
  compare_cmd->add_option("--cycle-mode", compare_args.mode, "optimal|paper")->check(modes);
  compare_cmd->add_option("--corpus", compare_args.corpus_sizes,
                          "Comma-separated sizes of a random corpus");
  compare_cmd->add_option("--count", compare_args.count, "Instances per corpus size");
  compare_cmd->add_option("--p", compare_args.p, "Parent probability of corpus instances");
  compare_cmd->add_option("file", compare_args.file, "Graph file");

  std::string decompose_file;
  auto* decompose_cmd = app.add_subcommand("decompose", "List weak components");
  decompose_cmd->add_option("file", decompose_file, "Graph file")->required();

  auto add_shape = [&](CLI::App* cmd, ShapeArgs& s) {
    cmd->add_option("--shape", s.shape, "random|path|cycle|star|rho|forest")
        ->required()
        ->check(shapes);
    cmd->add_option("--p", s.p, "Parent probability (random)")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--cycle-length", s.cycle_length, "Cycle length (rho)");
    cmd->add_option("--components", s.components, "Number of trees (forest)");
  };

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  add_shape(gen_cmd, gen_args.shape);
  gen_cmd->add_option("-n", gen_args.n, "Node count")->required();
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->required();
  gen_cmd->add_option("-o,--output", gen_args.output, "Write to a file instead of stdout");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver on generated instances");
  add_shape(bench_cmd, bench_args.shape);
  bench_cmd->add_option("--sizes", bench_args.sizes, "Comma-separated node counts")->required();
  bench_cmd->add_option("--trials", bench_args.trials, "Instances per size")->required();
  bench_cmd->add_option("-d", bench_args.d, "Hop radius")->check(radius);
  bench_cmd->add_option("--cycle-mode", bench_args.mode, "optimal|paper")->check(modes);
  bench_cmd->add_option("--csv", bench_args.csv, "Also write rows with timings here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*oracle_cmd) return cmd_oracle(oracle_args, out);
    if (*compare_cmd) return cmd_compare(compare_args, out);
    if (*decompose_cmd) return cmd_decompose(decompose_file, out);
    if (*gen_cmd) return cmd_gen(gen_args, out);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hopdom::cli
