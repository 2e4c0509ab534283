// Command-line front end: generate, stats, verify, prune, bench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sierpinski/bench.hpp"
#include "sierpinski/sierpinski.hpp"

namespace {

using namespace sierpinski;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

const std::map<std::string, Structure> structure_names{
    {"sierpinski", Structure::sierpinski}, {"fenwick", Structure::fenwick}};

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw CLI::ValidationError("--output", "cannot open " + path);
    stream = &file;
  }
  std::ostream& operator*() { return *stream; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--forest-file", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  Structure structure = Structure::sierpinski;
  std::size_t size = 0;
  std::string format = "json";
  std::string output;
};

int cmd_generate(const GenerateArgs& a) {
  const auto f = build(a.structure, a.size);
  Output out(a.output);
  if (a.format == "json") {
    *out << to_json(f) << '\n';
  } else if (a.format == "dot") {
    write_dot(*out, f);
  } else {
    write_edges(*out, f);
  }
  return exit_ok;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  Structure structure = Structure::sierpinski;
  std::size_t size = 0;
  bool csv = false;
  std::string output;
};

void print_summary(std::ostream& os, const WeightReport& r) {
  os << "max=" << r.max_weight << " avg=" << to_string(r.avg_weight) << " bound=" << r.bound
     << '\n';
  os << "avg_decimal=" << std::setprecision(10) << boost::rational_cast<double>(r.avg_weight)
     << " jiang_lower=" << r.jiang_lower << '\n';
}

int cmd_stats(const StatsArgs& a) {
  const auto report = weight_report(build(a.structure, a.size));
  Output out(a.output);
  if (a.csv) {
    // Keep the CSV stream clean for downstream tools.
    write_weight_csv(*out, report);
    print_summary(std::cerr, report);
    return exit_ok;
  }
  *out << "structure=" << to_string(a.structure) << " N=" << report.n << '\n';
  *out << "j weight\n";
  for (std::size_t j = 0; j < report.weights.size(); ++j) {
    *out << j << ' ' << report.weights[j] << '\n';
  }
  print_summary(*out, report);
  return exit_ok;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string sizes = "1..243";
  std::string forest_file;
  std::string trace_file;
  Structure structure = Structure::sierpinski;
  std::size_t size = 0;
  std::string mode = "bit";
  std::size_t oracle_max = 729;
};

constexpr std::size_t verify_size_limit = 2187;

// Oracle rows against both the reference scan and the precomputed index.
std::optional<std::string> check_oracle(const Forest& f) {
  std::vector<NodeSet> oracle;
  try {
    oracle = parity_sets_oracle(f);
  } catch (const SingularMatrixError& e) {
    return std::string("encoding matrix singular: ") + e.what();
  }
  const SetIndex index(f);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (parity_set(f, j) != oracle[j] || index.parity_set(j) != oracle[j]) {
      std::ostringstream os;
      os << "parity set mismatch at j=" << j << ": oracle " << oracle[j] << ", crossing-edge "
         << parity_set(f, j) << ", index " << index.parity_set(j);
      return os.str();
    }
  }
  return std::nullopt;
}

int verify_forest_file(const VerifyArgs& a) {
  const auto f = from_json(read_file(a.forest_file));
  if (auto bad = validate(f)) {
    std::cout << "FAIL forest " << a.forest_file << ": " << *bad << '\n';
    return exit_failed;
  }
  if (f.size() > 0 && f.size() <= a.oracle_max) {
    if (auto bad = check_oracle(f)) {
      std::cout << "FAIL forest " << a.forest_file << ": " << *bad << '\n';
      return exit_failed;
    }
  }
  const auto report = weight_report(f);
  std::cout << "forest " << a.forest_file << ": " << f.size() << " nodes valid\n";
  print_summary(std::cout, report);
  std::cout << "PASS\n";
  return exit_ok;
}

template <class Domain>
int verify_trace(const Forest& f, const std::vector<TraceOp>& ops) {
  const auto result = run_trace<Domain>(f, ops);
  for (auto v : result.replies) std::cout << v << '\n';
  if (result.first_mismatch) {
    std::cerr << "FAIL trace op " << *result.first_mismatch << " disagrees with plain array\n";
    return exit_failed;
  }
  return exit_ok;
}

int verify_trace_file(const VerifyArgs& a) {
  std::ifstream in(a.trace_file);
  if (!in) throw CLI::ValidationError("--trace", "cannot open " + a.trace_file);
  const auto ops = parse_trace(in);
  Forest f;
  if (!a.forest_file.empty()) {
    f = from_json(read_file(a.forest_file));
    if (auto bad = validate(f)) {
      std::cerr << "FAIL forest: " << *bad << '\n';
      return exit_failed;
    }
  } else {
    if (a.size == 0) throw CLI::ValidationError("--size", "--trace needs --size or --forest-file");
    f = build(a.structure, a.size);
  }
  return a.mode == "count" ? verify_trace<CountDomain>(f, ops) : verify_trace<BitDomain>(f, ops);
}

int verify_range(const VerifyArgs& a) {
  const auto range = parse_size_range(a.sizes);
  if (range.last > verify_size_limit) {
    throw CLI::ValidationError("--sizes", "sizes must lie within 1.." +
                                              std::to_string(verify_size_limit));
  }
  std::vector<std::size_t> previous;
  bool ok = true;
  auto fail = [&](const std::string& what) {
    std::cout << "FAIL " << what << '\n';
    ok = false;
  };
  for (std::size_t n = range.first; n <= range.last && ok; ++n) {
    for (auto s : {Structure::sierpinski, Structure::fenwick}) {
      const auto f = build(s, n);
      const auto label = to_string(s) + " N=" + std::to_string(n);
      if (auto bad = validate(f)) {
        fail(label + ": " + *bad);
        break;
      }
      if (n <= a.oracle_max) {
        if (auto bad = check_oracle(f)) {
          fail(label + ": " + *bad);
          break;
        }
      }
    }
    if (!ok) break;
    const auto weights = weight_table(build_sierpinski(n));
    if (auto v = theorem_check(n, weights)) {
      fail("bound: N=" + std::to_string(v->n) + " j=" + std::to_string(v->j) +
           " w=" + std::to_string(v->weight) + " bound=" + std::to_string(weight_bound(n)));
      break;
    }
    for (std::size_t j = 0; j < previous.size(); ++j) {
      if (weights[j] < previous[j]) {
        fail("monotonicity: j=" + std::to_string(j) + " w drops from " +
             std::to_string(previous[j]) + " at N=" + std::to_string(n - 1) + " to " +
             std::to_string(weights[j]) + " at N=" + std::to_string(n));
        break;
      }
    }
    const auto max = *std::max_element(weights.begin(), weights.end());
    const auto min = *std::min_element(weights.begin(), weights.end());
    std::cout << "N=" << n << ": " << n << " nodes, ";
    if (min == max) {
      std::cout << "all weight " << max;
    } else {
      std::cout << "weights " << min << ".." << max;
    }
    std::cout << ", bound " << weight_bound(n) << (n <= a.oracle_max ? ", oracle ok" : "")
              << '\n';
    previous = weights;
  }
  if (range.last > a.oracle_max && ok) {
    std::cout << "note: oracle check skipped above N=" << a.oracle_max << '\n';
  }
  std::cout << (ok ? "PASS" : "FAIL") << " sizes " << range.first << ".." << range.last << '\n';
  return ok ? exit_ok : exit_failed;
}

int cmd_verify(const VerifyArgs& a) {
  if (!a.trace_file.empty()) return verify_trace_file(a);
  if (!a.forest_file.empty()) return verify_forest_file(a);
  return verify_range(a);
}

// ---------------------------------------------------------------- prune

struct PruneArgs {
  Structure structure = Structure::sierpinski;
  std::size_t size = 0;
  std::string forest_file;
  std::string output;
};

int cmd_prune(const PruneArgs& a) {
  Forest f;
  if (!a.forest_file.empty()) {
    f = from_json(read_file(a.forest_file));
    if (auto bad = validate(f)) {
      std::cerr << "invalid forest: " << *bad << '\n';
      return exit_failed;
    }
  } else {
    if (a.size == 0) throw CLI::ValidationError("--size", "prune needs --size or --forest-file");
    f = build(a.structure, a.size);
  }
  Output out(a.output);
  *out << prune_report_json(greedy_prune(f)).dump() << '\n';
  return exit_ok;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::string> structures{"naive", "fenwick", "sierpinski"};
  std::vector<std::size_t> sizes{81, 729, 6561, 59049, 531441};
  std::size_t ops = 20000;
  std::uint64_t seed = 20240611;
};

int cmd_bench(const BenchArgs& a) {
  const std::map<std::string, bench::Variant> variants{{"naive", bench::Variant::naive},
                                                       {"fenwick", bench::Variant::fenwick},
                                                       {"sierpinski", bench::Variant::sierpinski}};
  std::cout << "variant,N,ops,update_ns,prefix_ns,update_touched,prefix_touched,combined_touched\n";
  for (const auto& name : a.structures) {
    for (auto n : a.sizes) {
      const auto row = bench::run(variants.at(name), n, a.ops, a.seed);
      std::cout << name << ',' << n << ',' << row.ops << ',' << std::fixed << std::setprecision(1)
                << row.update_ns << ',' << row.prefix_ns << ',' << std::setprecision(4)
                << row.update_touched << ',' << row.prefix_touched << ','
                << row.combined_touched << '\n';
      std::cout.unsetf(std::ios::floatfield);
    }
  }
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fenwick and Sierpinski forest-encoded bit arrays"};
  app.require_subcommand(1);

  auto structure_opt = [](CLI::App* sub, Structure& target) {
    return sub->add_option("--structure", target, "sierpinski or fenwick")
        ->transform(CLI::CheckedTransformer(structure_names, CLI::ignore_case));
  };

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build a forest and serialize it");
  structure_opt(generate, gen.structure);
  generate->add_option("--size", gen.size, "Number of nodes")->required()->check(CLI::PositiveNumber);
  generate->add_option("--format", gen.format, "json, dot or edges")
      ->check(CLI::IsMember({"json", "dot", "edges"}));
  generate->add_option("--output,-o", gen.output, "Output path (default stdout)");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Per-node weights and summary bounds");
  structure_opt(stats_cmd, stats.structure);
  stats_cmd->add_option("--size", stats.size, "Number of nodes")->required()->check(CLI::PositiveNumber);
  stats_cmd->add_flag("--csv", stats.csv, "Emit N,j,weight,bound rows");
  stats_cmd->add_option("--output,-o", stats.output, "Output path (default stdout)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Structural, oracle, bound and monotonicity checks");
  verify->add_option("--sizes", ver.sizes, "Size range a..b within 1..2187");
  verify->add_option("--forest-file", ver.forest_file, "Check a JSON forest instead of a range");
  verify->add_option("--trace", ver.trace_file, "Replay an operation trace against a plain array");
  structure_opt(verify, ver.structure);
  verify->add_option("--size", ver.size, "Forest size for --trace")->check(CLI::PositiveNumber);
  verify->add_option("--mode", ver.mode, "bit or count (for --trace)")
      ->check(CLI::IsMember({"bit", "count"}));
  verify->add_option("--oracle-max", ver.oracle_max, "Largest N given the GF(2) oracle check");

  PruneArgs prn;
  auto* prune = app.add_subcommand("prune", "Greedy edge pruning; prints a JSON report");
  structure_opt(prune, prn.structure);
  prune->add_option("--size", prn.size, "Number of nodes")->check(CLI::PositiveNumber);
  prune->add_option("--forest-file", prn.forest_file, "Prune a JSON forest");
  prune->add_option("--output,-o", prn.output, "Output path (default stdout)");

  BenchArgs bch;
  auto* bench_cmd = app.add_subcommand("bench", "Time update/prefix for naive, fenwick, sierpinski");
  bench_cmd->add_option("--structures", bch.structures, "Variants to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"naive", "fenwick", "sierpinski"}));
  bench_cmd->add_option("--sizes", bch.sizes, "Sizes, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--ops", bch.ops, "Operations per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bch.seed, "Workload seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*stats_cmd) return cmd_stats(stats);
    if (*verify) return cmd_verify(ver);
    if (*prune) return cmd_prune(prn);
    if (*bench_cmd) return cmd_bench(bch);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_usage;
}
