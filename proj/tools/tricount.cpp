// tricount: exact triangle counting from the command line.
//
//   tricount count <file> [--format F] [--algo A] [--enumerate] ...
//   tricount bench <file...> [--reps R] [--out prefix]
//   tricount verify <file> [--cap N]
//
// Exit codes: 0 ok, 1 I/O or parse error, 2 cross-validation mismatch,
// 3 bad arguments.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tricount/tricount.hpp"

namespace {

using namespace tricount;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<GraphFormat> format_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto f = format_from_name(s);
  if (!f) throw UsageError("unknown format '" + s + "'");
  return f;
}

Graph load(const std::string& path, const std::string& format) {
  LoadedGraph loaded = load_graph(path, format_option(format));
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  return std::move(loaded.graph);
}

void print_stats(const Graph& g) {
  const DegreeStats s = degree_stats(g);
  std::cerr << "vertices " << g.num_vertices() << "  directed_edges " << g.num_directed_edges()
            << "  max_degree " << s.max_degree << "  ssd " << s.ssd << '\n';
}

void print_report(Engine e, const TriangleReport& r) {
  std::cerr << engine_name(e) << ": " << r.count << " triangles in " << r.total_seconds() << " s [";
  for (std::size_t i = 0; i < r.timings.size(); ++i)
    std::cerr << (i ? ", " : "") << r.timings[i].name << " " << r.timings[i].seconds;
  std::cerr << "]\n";
}

struct CountArgs {
  std::string file, format, algo = "intersect", matrix_strategy = "fused";
  bool enumerate = false, no_permute = false;
  std::uint64_t threshold = 64, filter_iters = 2;
  unsigned threads = 0;
};

int run_count(const CountArgs& a) {
  std::vector<Engine> engines;
  if (a.algo == "all") {
    engines.assign(kAllEngines.begin(), kAllEngines.end());
  } else if (auto e = engine_from_name(a.algo)) {
    engines.push_back(*e);
  } else {
    throw UsageError("unknown algorithm '" + a.algo + "'");
  }
  if (a.enumerate && a.algo == "matrix") throw UsageError("the matrix engine counts but does not enumerate");

  EngineOptions opts;
  opts.with_threads(a.threads).with_enumeration(a.enumerate);
  opts.intersect.threshold = a.threshold;
  opts.subgraph.filter_iterations = a.filter_iters;
  opts.matrix.permute = !a.no_permute;
  static const std::map<std::string, MatrixStrategy> strategies{
      {"plain", MatrixStrategy::kPlain}, {"masked", MatrixStrategy::kMasked}, {"fused", MatrixStrategy::kFused}};
  opts.matrix.strategy = strategies.at(a.matrix_strategy);

  const Graph g = load(a.file, a.format);
  print_stats(g);

  std::optional<TriangleReport> first;
  Engine first_engine = engines.front();
  for (Engine e : engines) {
    TriangleReport r = count_triangles(g, e, opts);
    print_report(e, r);
    if (!first) {
      first = std::move(r);
      continue;
    }
    if (r.count != first->count ||
        (r.triangles && first->triangles && *r.triangles != *first->triangles)) {
      std::cerr << "error: " << engine_name(first_engine) << " and " << engine_name(e) << " disagree ("
                << first->count << " vs " << r.count << ")\n";
      return kExitMismatch;
    }
    if (!first->triangles && r.triangles) first->triangles = std::move(r.triangles);
  }

  std::cout << first->count << '\n';
  if (a.enumerate && first->triangles)
    for (const Triangle& t : *first->triangles) std::cout << t.a << ' ' << t.b << ' ' << t.c << '\n';
  return kExitOk;
}

int run_verify(const std::string& file, const std::string& format, std::size_t cap, unsigned threads) {
  const Graph g = load(file, format);
  print_stats(g);

  EngineOptions opts;
  opts.with_threads(threads).with_enumeration(true);
  std::optional<TriangleReport> oracle;
  if (g.num_vertices() <= cap) {
    oracle = brute_force_count(g, cap);
    std::cout << "oracle: " << oracle->count << '\n';
  } else {
    std::cout << "oracle: skipped (" << g.num_vertices() << " vertices > cap " << cap << ")\n";
  }

  bool ok = true;
  std::optional<TriangleReport> reference = oracle;
  auto check = [&](const std::string& label, TriangleReport r) {
    bool agree = true;
    if (reference) {
      agree = r.count == reference->count;
      if (agree && r.triangles && reference->triangles) agree = *r.triangles == *reference->triangles;
    }
    std::cout << label << ": " << r.count << (agree ? "" : "  MISMATCH") << '\n';
    ok = ok && agree;
    if (!reference) reference = std::move(r);
  };

  check("intersect", count_triangles(g, Engine::kIntersect, opts));
  check("subgraph", count_triangles(g, Engine::kSubgraph, opts));
  for (auto [name, s] : {std::pair{"matrix/plain", MatrixStrategy::kPlain},
                         std::pair{"matrix/masked", MatrixStrategy::kMasked},
                         std::pair{"matrix/fused", MatrixStrategy::kFused}}) {
    EngineOptions m = opts;
    m.matrix.strategy = s;
    check(name, count_triangles(g, Engine::kMatrix, m));
  }
  std::cout << (ok ? "OK" : "FAILED") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

int run_bench(const std::vector<std::string>& files, const std::string& format, unsigned reps,
              const std::string& prefix, unsigned threads) {
  std::vector<NamedGraph> graphs;
  for (const auto& f : files) graphs.push_back({std::filesystem::path(f).filename().string(), load(f, format)});

  BenchOptions opts;
  opts.repetitions = reps;
  opts.engines.with_threads(threads);
  const auto records = run_benchmark(graphs, kAllEngines, opts);

  std::ofstream csv(prefix + ".csv");
  std::ofstream json(prefix + ".json");
  if (!csv || !json) throw Error("cannot write " + prefix + ".csv / .json");
  write_bench_csv(records, csv);
  json << nlohmann::json(records).dump(2) << '\n';

  for (const auto& r : records) {
    std::cerr << r.dataset << ": " << r.runs.front().count << " triangles, ssd " << r.ssd;
    for (const auto& run : r.runs) std::cerr << "  " << engine_name(run.engine) << " " << run.seconds << " s";
    std::cerr << '\n';
  }
  if (records.size() >= 3) {
    for (Engine e : kAllEngines) {
      try {
        const LogLogFit fit = fit_loglog_slope(records, e);
        std::cerr << engine_name(e) << ": log-log slope " << fit.slope << ", intercept " << fit.intercept << '\n';
      } catch (const InsufficientDataError& err) {
        std::cerr << engine_name(e) << ": no fit (" << err.what() << ")\n";
      }
    }
  }
  std::cerr << "wrote " << prefix << ".csv and " << prefix << ".json\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triangle counting: set intersection, sparse matrix and subgraph matching engines"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count (and optionally list) triangles in a graph file");
  count_cmd->add_option("file", count.file, "Graph file (.txt/.edges SNAP, .mtx, .graph DIMACS10)")->required();
  count_cmd->add_option("--format", count.format, "Override format detection")
      ->check(CLI::IsMember({"snap", "mtx", "dimacs10"}));
  count_cmd->add_option("--algo", count.algo, "Engine to run")
      ->check(CLI::IsMember({"intersect", "matrix", "subgraph", "all"}))
      ->capture_default_str();
  count_cmd->add_flag("--enumerate", count.enumerate, "Print every triangle as 'a b c' with a < b < c");
  count_cmd->add_option("--threshold", count.threshold, "Small/large bucket split for intersection")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  count_cmd->add_option("--filter-iters", count.filter_iters, "Candidate filtering rounds for subgraph matching")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  count_cmd->add_option("--matrix-strategy", count.matrix_strategy, "plain, masked or fused")
      ->check(CLI::IsMember({"plain", "masked", "fused"}))
      ->capture_default_str();
  count_cmd->add_flag("--no-permute", count.no_permute, "Skip the degree-order permutation in the matrix engine");
  count_cmd->add_option("--threads", count.threads, "Worker threads (0 = all cores)")->capture_default_str();

  std::vector<std::string> bench_files;
  std::string bench_format, bench_prefix = "bench";
  unsigned bench_reps = 5, bench_threads = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Time every engine and write prefix.csv / prefix.json");
  bench_cmd->add_option("files", bench_files, "Graph files")->required();
  bench_cmd->add_option("--format", bench_format, "Override format detection")
      ->check(CLI::IsMember({"snap", "mtx", "dimacs10"}));
  bench_cmd->add_option("--reps", bench_reps, "Repetitions per engine (median is reported)")
      ->check(CLI::Range(1u, 1000000u))
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_prefix, "Output prefix")->capture_default_str();
  bench_cmd->add_option("--threads", bench_threads, "Worker threads (0 = all cores)")->capture_default_str();

  std::string verify_file, verify_format;
  std::size_t verify_cap = kDefaultOracleCap;
  unsigned verify_threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all engines and the brute-force oracle");
  verify_cmd->add_option("file", verify_file, "Graph file")->required();
  verify_cmd->add_option("--format", verify_format, "Override format detection")
      ->check(CLI::IsMember({"snap", "mtx", "dimacs10"}));
  verify_cmd->add_option("--cap", verify_cap, "Largest vertex count the oracle accepts")->capture_default_str();
  verify_cmd->add_option("--threads", verify_threads, "Worker threads (0 = all cores)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count);
    if (*bench_cmd) return run_bench(bench_files, bench_format, bench_reps, bench_prefix, bench_threads);
    if (*verify_cmd) return run_verify(verify_file, verify_format, verify_cap, verify_threads);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CrossValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const tricount::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
