#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricount/graph.hpp"

namespace tricount {

/// A triangle written canonically, a < b < c.
struct Triangle {
  VertexId a = 0, b = 0, c = 0;

  static Triangle canonical(VertexId x, VertexId y, VertexId z) {
    std::array<VertexId, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
  }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct PhaseTiming {
  std::string name;
  double seconds = 0.0;

  friend bool operator==(const PhaseTiming&, const PhaseTiming&) = default;
};

/// Work counters. Fields an engine does not use stay zero.
struct Workload {
  std::uint64_t ssd = 0;
  std::uint64_t intersections = 0;      // set intersections or sparse dot products
  std::uint64_t intersection_work = 0;  // sum of min(|a|, |b|) over those
  std::uint64_t unfiltered_work = 0;    // same sum over every directed edge of the input
  std::uint64_t oriented_edges = 0;
  std::uint64_t small_bucket = 0;
  std::uint64_t large_bucket = 0;
  std::uint64_t candidate_edges = 0;
  std::uint64_t filter_iterations = 0;
  std::uint64_t product_nonzeros = 0;

  friend bool operator==(const Workload&, const Workload&) = default;
};

struct TriangleReport {
  std::uint64_t count = 0;
  std::optional<std::vector<Triangle>> triangles;
  std::vector<PhaseTiming> timings;
  Workload workload;

  double total_seconds() const {
    double s = 0.0;
    for (const auto& t : timings) s += t.seconds;
    return s;
  }
};

/// Appends one PhaseTiming per lap() to a report.
class PhaseTimer {
 public:
  using clock = std::chrono::steady_clock;

  explicit PhaseTimer(std::vector<PhaseTiming>& sink) : sink_(sink), start_(clock::now()) {}

  void lap(std::string name) {
    const auto now = clock::now();
    sink_.push_back({std::move(name), std::chrono::duration<double>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<PhaseTiming>& sink_;
  clock::time_point start_;
};

}  // namespace tricount
