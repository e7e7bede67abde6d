#pragma once

// Brute-force reference counters. Deliberately shares nothing with the
// engines: adjacency is looked up in a dense bit matrix, never intersected.

#include <cstdint>
#include <string>
#include <vector>

#include "tricount/error.hpp"
#include "tricount/graph.hpp"
#include "tricount/report.hpp"

namespace tricount {

inline constexpr std::size_t kDefaultOracleCap = 2000;

/// Lists every triple a < b < c with all three edges present. Refuses graphs
/// with more than `cap` vertices.
inline TriangleReport brute_force_count(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  const std::size_t n = g.num_vertices();
  if (n > cap)
    throw CapExceededError("oracle refuses " + std::to_string(n) + " vertices (cap " +
                           std::to_string(cap) + ")");

  std::vector<bool> adjacent(n * n, false);
  for (VertexId u : g.vertices())
    for (VertexId v : g.neighbors(u)) adjacent[std::size_t{u} * n + v] = true;
  auto edge = [&](std::size_t x, std::size_t y) { return adjacent[x * n + y]; };

  TriangleReport report;
  PhaseTimer timer(report.timings);
  std::vector<Triangle> found;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!edge(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (edge(a, c) && edge(b, c))
          found.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c)});
    }
  timer.lap("brute-force");
  report.count = found.size();
  report.triangles = std::move(found);
  return report;
}

/// Number of paths of length two: sum over v of C(d(v), 2).
inline std::uint64_t wedge_count(const Graph& g) {
  std::uint64_t w = 0;
  for (VertexId v : g.vertices()) {
    const std::uint64_t d = g.degree(v);
    if (d >= 2) w += d * (d - 1) / 2;
  }
  return w;
}

}  // namespace tricount
