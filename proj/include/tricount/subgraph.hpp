#pragma once

// Triangle counting as subgraph matching: filter candidate vertices and
// edges for the triangle query, then join candidate edges under the query's
// intersection rule. Every match is listed.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/parallel.hpp"
#include "tricount/report.hpp"

namespace tricount {

/// Structural constraint of the triangle query: three query edges
/// (q0,q1), (q1,q2), (q0,q2). Three data edges satisfy it when they pairwise
/// share exactly one endpoint and together touch exactly three vertices.
struct TriangleRule {
  static constexpr std::array<std::pair<int, int>, 3> kQueryEdges{{{0, 1}, {1, 2}, {0, 2}}};

  static bool satisfied(Edge e1, Edge e2, Edge e3) noexcept {
    auto shares_one = [](Edge x, Edge y) {
      const int common = (x.first == y.first) + (x.first == y.second) + (x.second == y.first) +
                         (x.second == y.second);
      return common == 1;
    };
    if (e1.first == e1.second || e2.first == e2.second || e3.first == e3.second) return false;
    if (!shares_one(e1, e2) || !shares_one(e2, e3) || !shares_one(e1, e3)) return false;
    std::array<VertexId, 6> ends{e1.first, e1.second, e2.first, e2.second, e3.first, e3.second};
    std::sort(ends.begin(), ends.end());
    return std::unique(ends.begin(), ends.end()) - ends.begin() == 3;
  }
};

/// Matching state for the unlabeled triangle query. Every query vertex has
/// the same label and degree, so one candidate column and one edge bin serve
/// all three query vertices and edges.
struct QueryBinding {
  std::vector<std::uint8_t> c_set;
  std::vector<Edge> candidate_edges;  // u < v, sorted
  TriangleRule intersection_rule;
  std::uint64_t iterations_run = 0;
};

inline std::vector<std::uint8_t> initialize_candidate_set(const Graph& g, unsigned threads = 1) {
  std::vector<std::uint8_t> c_set(g.num_vertices(), 0);
  parallel_for(g.num_vertices(), threads,
               [&](std::size_t v) { c_set[v] = g.degree(static_cast<VertexId>(v)) >= 2; });
  return c_set;
}

/// Keeps edges whose endpoints are both candidates, then re-derives the
/// candidate set from the pruned degrees and repeats, up to `iterations`
/// rounds or until the edge set stops shrinking.
inline QueryBinding collect_candidate_edges(const Graph& g, std::vector<std::uint8_t> c_set,
                                            std::uint64_t iterations, unsigned threads = 1) {
  if (iterations < 1) throw InputError("filter iterations must be >= 1");
  if (c_set.size() != g.num_vertices()) throw InputError("candidate set size mismatch");
  threads = resolve_threads(threads);

  QueryBinding qb;
  std::vector<Edge> edges = g.undirected_edges();
  std::vector<VertexId> degree(g.num_vertices());
  for (std::uint64_t it = 1;; ++it) {
    // Bulk filter: per-chunk survivors concatenated in chunk order.
    const std::size_t nc = chunk_count(edges.size(), threads);
    std::vector<std::vector<Edge>> kept(nc);
    parallel_chunks(edges.size(), nc, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k)
        if (c_set[edges[k].first] && c_set[edges[k].second]) kept[c].push_back(edges[k]);
    });
    std::vector<Edge> next;
    next.reserve(edges.size());
    for (auto& part : kept) next.insert(next.end(), part.begin(), part.end());

    qb.iterations_run = it;
    const bool fixed_point = next.size() == edges.size();
    edges = std::move(next);
    if (fixed_point || it >= iterations) break;

    std::fill(degree.begin(), degree.end(), 0);
    for (const auto& [u, v] : edges) {
      ++degree[u];
      ++degree[v];
    }
    for (std::size_t v = 0; v < degree.size(); ++v) c_set[v] = degree[v] >= 2;
  }
  qb.c_set = std::move(c_set);
  qb.candidate_edges = std::move(edges);
  return qb;
}

/// Joins candidate edges into triangle matches. Each edge (u, v) is extended
/// only by w > v common to both endpoints' candidate adjacency, so every
/// triangle is emitted once, as (u, v, w) with u < v < w, after the three
/// edges are checked against the rule.
inline TriangleReport join_candidate_edges(std::span<const Edge> candidate_edges,
                                           const TriangleRule& rule, std::size_t num_vertices,
                                           bool enumerate = true, unsigned threads = 1) {
  TriangleReport report;
  threads = resolve_threads(threads);

  std::vector<EdgeOffset> offsets(num_vertices + 1, 0);
  for (const auto& [u, v] : candidate_edges) {
    if (u >= v || v >= num_vertices) throw InputError("candidate edges must satisfy u < v < n");
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<VertexId> adj(offsets.back());
  {
    std::vector<EdgeOffset> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : candidate_edges) {
      adj[cursor[u]++] = v;
      adj[cursor[v]++] = u;
    }
  }
  for (std::size_t v = 0; v < num_vertices; ++v)
    std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  auto upper_neighbors = [&](VertexId x, VertexId above) {
    auto first = adj.begin() + static_cast<std::ptrdiff_t>(offsets[x]);
    auto last = adj.begin() + static_cast<std::ptrdiff_t>(offsets[x + 1]);
    first = std::upper_bound(first, last, above);
    return std::span<const VertexId>(adj.data() + (first - adj.begin()),
                                     static_cast<std::size_t>(last - first));
  };

  struct Chunk {
    std::uint64_t count = 0;
    std::vector<Triangle> matches;
  };
  const std::size_t nc = chunk_count(candidate_edges.size(), threads);
  std::vector<Chunk> chunks(nc);
  parallel_chunks(candidate_edges.size(), nc, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Chunk& out = chunks[c];
    for (std::size_t k = begin; k < end; ++k) {
      const auto [u, v] = candidate_edges[k];
      auto a = upper_neighbors(u, v);
      auto b = upper_neighbors(v, v);
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
          ++i;
        } else if (b[j] < a[i]) {
          ++j;
        } else {
          const VertexId w = a[i];
          if (rule.satisfied({u, v}, {v, w}, {u, w})) {
            ++out.count;
            if (enumerate) out.matches.push_back({u, v, w});
          }
          ++i;
          ++j;
        }
      }
    }
  });

  std::vector<Triangle> all;
  for (auto& c : chunks) {
    report.count += c.count;
    if (enumerate) all.insert(all.end(), c.matches.begin(), c.matches.end());
  }
  if (enumerate) {
    std::sort(all.begin(), all.end());
    report.triangles = std::move(all);
  }
  report.workload.candidate_edges = candidate_edges.size();
  report.workload.intersections = candidate_edges.size();
  return report;
}

struct SubgraphOptions {
  std::uint64_t filter_iterations = 2;
  bool enumerate = true;
  unsigned threads = 0;
};

inline TriangleReport count_triangles_subgraph(const Graph& g, const SubgraphOptions& opts = {}) {
  std::vector<PhaseTiming> timings;
  PhaseTimer timer(timings);
  const unsigned threads = resolve_threads(opts.threads);

  auto c_set = initialize_candidate_set(g, threads);
  timer.lap("candidates");
  QueryBinding qb = collect_candidate_edges(g, std::move(c_set), opts.filter_iterations, threads);
  timer.lap("filter");
  TriangleReport report = join_candidate_edges(qb.candidate_edges, qb.intersection_rule,
                                               g.num_vertices(), opts.enumerate, threads);
  timer.lap("join");

  report.timings = std::move(timings);
  report.workload.filter_iterations = qb.iterations_run;
  for (VertexId v : g.vertices()) {
    const VertexId d = g.degree(v);
    report.workload.ssd += std::uint64_t{d} * d;
  }
  return report;
}

}  // namespace tricount
