#pragma once

// Benchmark harness: runs engines over graphs, cross-validates their counts,
// and fits runtime against the sum of squared degrees on a log-log scale.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricount/engines.hpp"
#include "tricount/error.hpp"
#include "tricount/graph.hpp"
#include "tricount/report.hpp"

namespace tricount {

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct EngineRun {
  Engine engine = Engine::kIntersect;
  std::uint64_t count = 0;
  double seconds = 0.0;  // median over repetitions
  std::vector<PhaseTiming> phases;
  Workload workload;

  friend bool operator==(const EngineRun&, const EngineRun&) = default;
};

struct BenchRecord {
  std::string dataset;
  std::uint64_t vertices = 0;
  std::uint64_t directed_edges = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t ssd = 0;
  std::vector<EngineRun> runs;

  const EngineRun* find(Engine e) const {
    for (const auto& r : runs)
      if (r.engine == e) return &r;
    return nullptr;
  }

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchOptions {
  unsigned repetitions = 5;
  EngineOptions engines;
};

inline double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

/// Times each engine on each graph. Timing covers the engine call only
/// (graphs are already built). Any disagreement between engines, or between
/// repetitions of one engine, throws CrossValidationError.
inline std::vector<BenchRecord> run_benchmark(std::span<const NamedGraph> graphs,
                                              std::span<const Engine> engines,
                                              const BenchOptions& opts = {}) {
  if (opts.repetitions < 1) throw InputError("repetitions must be >= 1");
  std::vector<BenchRecord> records;
  for (const auto& [name, g] : graphs) {
    BenchRecord rec;
    rec.dataset = name;
    rec.vertices = g.num_vertices();
    rec.directed_edges = g.num_directed_edges();
    const DegreeStats stats = degree_stats(g);
    rec.max_degree = stats.max_degree;
    rec.ssd = stats.ssd;

    for (Engine e : engines) {
      std::vector<TriangleReport> reports;
      std::vector<double> times;
      for (unsigned r = 0; r < opts.repetitions; ++r) {
        reports.push_back(count_triangles(g, e, opts.engines));
        times.push_back(reports.back().total_seconds());
        if (reports.back().count != reports.front().count)
          throw CrossValidationError(std::string(engine_name(e)) + " returned different counts across repetitions on " + name);
      }
      EngineRun run;
      run.engine = e;
      run.count = reports.front().count;
      run.seconds = median(times);
      // Phase breakdown of the repetition closest to the median.
      std::size_t best = 0;
      for (std::size_t i = 1; i < times.size(); ++i)
        if (std::abs(times[i] - run.seconds) < std::abs(times[best] - run.seconds)) best = i;
      run.phases = reports[best].timings;
      run.workload = reports[best].workload;
      if (!rec.runs.empty() && rec.runs.front().count != run.count)
        throw CrossValidationError("count mismatch on " + name + ": " +
                                   std::string(engine_name(rec.runs.front().engine)) + "=" +
                                   std::to_string(rec.runs.front().count) + ", " +
                                   std::string(engine_name(e)) + "=" + std::to_string(run.count));
      rec.runs.push_back(std::move(run));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;  // log10(time) at log10(ssd) = 0
};

/// Least-squares line through (log10 x, log10 y).
inline LogLogFit fit_loglog(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw InsufficientDataError("log-log fit needs at least 3 points, got " + std::to_string(points.size()));
  if (std::all_of(points.begin(), points.end(), [&](const auto& p) { return p.first == points.front().first; }))
    throw InsufficientDataError("log-log fit needs at least two distinct x values");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : points) {
    if (!(x > 0) || !(y > 0)) throw InsufficientDataError("log-log fit needs positive values");
    const double lx = std::log10(x), ly = std::log10(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(points.size());
  const double denom = n * sxx - sx * sx;
  LogLogFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

inline LogLogFit fit_loglog_slope(std::span<const BenchRecord> records, Engine engine) {
  std::vector<std::pair<double, double>> points;
  for (const auto& r : records)
    if (const EngineRun* run = r.find(engine))
      points.emplace_back(static_cast<double>(r.ssd), run->seconds);
  return fit_loglog(points);
}

// JSON schema: an array of records, see README.

inline void to_json(nlohmann::json& j, const PhaseTiming& p) { j = {{"name", p.name}, {"seconds", p.seconds}}; }
inline void from_json(const nlohmann::json& j, PhaseTiming& p) {
  j.at("name").get_to(p.name);
  j.at("seconds").get_to(p.seconds);
}

inline void to_json(nlohmann::json& j, const Workload& w) {
  j = {{"ssd", w.ssd},
       {"intersections", w.intersections},
       {"intersection_work", w.intersection_work},
       {"unfiltered_work", w.unfiltered_work},
       {"oriented_edges", w.oriented_edges},
       {"small_bucket", w.small_bucket},
       {"large_bucket", w.large_bucket},
       {"candidate_edges", w.candidate_edges},
       {"filter_iterations", w.filter_iterations},
       {"product_nonzeros", w.product_nonzeros}};
}
inline void from_json(const nlohmann::json& j, Workload& w) {
  j.at("ssd").get_to(w.ssd);
  j.at("intersections").get_to(w.intersections);
  j.at("intersection_work").get_to(w.intersection_work);
  j.at("unfiltered_work").get_to(w.unfiltered_work);
  j.at("oriented_edges").get_to(w.oriented_edges);
  j.at("small_bucket").get_to(w.small_bucket);
  j.at("large_bucket").get_to(w.large_bucket);
  j.at("candidate_edges").get_to(w.candidate_edges);
  j.at("filter_iterations").get_to(w.filter_iterations);
  j.at("product_nonzeros").get_to(w.product_nonzeros);
}

inline void to_json(nlohmann::json& j, const EngineRun& r) {
  j = {{"engine", engine_name(r.engine)},
       {"count", r.count},
       {"seconds", r.seconds},
       {"phases", r.phases},
       {"workload", r.workload}};
}
inline void from_json(const nlohmann::json& j, EngineRun& r) {
  const auto e = engine_from_name(j.at("engine").get<std::string>());
  if (!e) throw InputError("unknown engine in benchmark JSON");
  r.engine = *e;
  j.at("count").get_to(r.count);
  j.at("seconds").get_to(r.seconds);
  j.at("phases").get_to(r.phases);
  j.at("workload").get_to(r.workload);
}

inline void to_json(nlohmann::json& j, const BenchRecord& r) {
  j = {{"dataset", r.dataset},
       {"ssd", r.ssd},
       {"vertices", r.vertices},
       {"directed_edges", r.directed_edges},
       {"max_degree", r.max_degree},
       {"runs", r.runs}};
}
inline void from_json(const nlohmann::json& j, BenchRecord& r) {
  j.at("dataset").get_to(r.dataset);
  j.at("ssd").get_to(r.ssd);
  j.at("vertices").get_to(r.vertices);
  j.at("directed_edges").get_to(r.directed_edges);
  j.at("max_degree").get_to(r.max_degree);
  j.at("runs").get_to(r.runs);
}

/// One row per dataset: plot columns (ssd, per-engine seconds) first, then
/// the dataset description and the agreed count.
inline void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out) {
  std::vector<Engine> engines;
  for (const auto& r : records)
    for (const auto& run : r.runs)
      if (std::find(engines.begin(), engines.end(), run.engine) == engines.end()) engines.push_back(run.engine);

  out << "dataset,ssd";
  for (Engine e : engines) out << ",time_" << engine_name(e);
  out << ",vertices,directed_edges,max_degree,triangles\n";
  out.precision(17);
  for (const auto& r : records) {
    out << r.dataset << ',' << r.ssd;
    for (Engine e : engines) {
      out << ',';
      if (const EngineRun* run = r.find(e)) out << run->seconds;
    }
    out << ',' << r.vertices << ',' << r.directed_edges << ',' << r.max_degree << ','
        << (r.runs.empty() ? 0 : r.runs.front().count) << '\n';
  }
}

}  // namespace tricount
