#pragma once

// Edge-based set-intersection triangle counting ("forward" algorithm).
//
// Every undirected edge is kept in exactly one orientation, from the endpoint
// of larger degree to the one of smaller degree (ties: smaller id first). The
// kept edges form an acyclic out-adjacency, and every triangle is found once
// as |out(u) ∩ out(v)| over kept edges (u, v).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/parallel.hpp"
#include "tricount/report.hpp"

namespace tricount {

struct OrientedEdgeList {
  std::vector<Edge> edges;
  std::vector<EdgeOffset> induced_offsets;
  std::vector<VertexId> induced_indices;

  std::span<const VertexId> out_neighbors(VertexId v) const noexcept {
    return {induced_indices.data() + induced_offsets[v],
            induced_indices.data() + induced_offsets[v + 1]};
  }
  std::size_t out_degree(VertexId v) const noexcept {
    return induced_offsets[v + 1] - induced_offsets[v];
  }
};

/// True when the edge (u, v) survives the degree filter.
inline bool keeps_orientation(const Graph& g, VertexId u, VertexId v) noexcept {
  const VertexId du = g.degree(u), dv = g.degree(v);
  return du > dv || (du == dv && u < v);
}

inline OrientedEdgeList form_filtered_edge_list(const Graph& g) {
  OrientedEdgeList oel;
  const std::size_t n = g.num_vertices();
  oel.induced_offsets.assign(n + 1, 0);
  oel.edges.reserve(g.num_edges());
  oel.induced_indices.reserve(g.num_edges());
  for (VertexId u : g.vertices()) {
    for (VertexId v : g.neighbors(u)) {
      if (!keeps_orientation(g, u, v)) continue;
      oel.edges.emplace_back(u, v);
      oel.induced_indices.push_back(v);
    }
    oel.induced_offsets[u + 1] = oel.induced_indices.size();
  }
  return oel;
}

struct IntersectBuckets {
  std::vector<std::size_t> small;
  std::vector<std::size_t> large;
  std::uint64_t threshold = 64;
};

/// Splits edge indices by the longer of the two out-lists: both shorter than
/// `threshold` goes to `small`.
inline IntersectBuckets bucket_edges(const OrientedEdgeList& oel, std::uint64_t threshold) {
  if (threshold < 1) throw InputError("bucket threshold must be >= 1");
  IntersectBuckets b;
  b.threshold = threshold;
  for (std::size_t i = 0; i < oel.edges.size(); ++i) {
    const auto [u, v] = oel.edges[i];
    const std::size_t longest = std::max(oel.out_degree(u), oel.out_degree(v));
    (longest < threshold ? b.small : b.large).push_back(i);
  }
  return b;
}

/// Linear merge of two strictly increasing slices. on_match(w) fires in
/// ascending order of w.
template <typename OnMatch>
std::uint64_t intersect_merge(std::span<const VertexId> a, std::span<const VertexId> b,
                              OnMatch&& on_match) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      on_match(a[i]);
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

/// Scans the shorter slice and binary-searches each element in the longer
/// one, narrowing the search window as it goes. Same contract as
/// intersect_merge.
template <typename OnMatch>
std::uint64_t intersect_search(std::span<const VertexId> a, std::span<const VertexId> b,
                               OnMatch&& on_match) {
  if (a.size() > b.size()) std::swap(a, b);
  std::uint64_t count = 0;
  auto lo = b.begin();
  for (VertexId x : a) {
    lo = std::lower_bound(lo, b.end(), x);
    if (lo == b.end()) break;
    if (*lo == x) {
      on_match(x);
      ++count;
      ++lo;
    }
  }
  return count;
}

inline std::uint64_t intersect_sorted(std::span<const VertexId> a, std::span<const VertexId> b) {
  return intersect_merge(a, b, [](VertexId) {});
}

inline std::vector<VertexId> intersect_sorted_ids(std::span<const VertexId> a,
                                                  std::span<const VertexId> b) {
  std::vector<VertexId> out;
  intersect_merge(a, b, [&out](VertexId w) { out.push_back(w); });
  return out;
}

enum class IntersectStrategy {
  kAuto,    // merge for the small bucket, search for the large one
  kMerge,
  kSearch,
};

struct IntersectOptions {
  bool enumerate = false;
  std::uint64_t threshold = 64;
  IntersectStrategy strategy = IntersectStrategy::kAuto;
  unsigned threads = 0;
};

namespace detail {

struct IntersectChunk {
  std::uint64_t count = 0;
  std::uint64_t work = 0;
  std::vector<Triangle> triangles;
};

template <typename Kernel>
void intersect_bucket(const OrientedEdgeList& oel, const std::vector<std::size_t>& bucket,
                      bool enumerate, unsigned threads, Kernel kernel,
                      std::vector<IntersectChunk>& chunks) {
  const std::size_t first = chunks.size();
  const std::size_t nc = chunk_count(bucket.size(), threads);
  chunks.resize(first + nc);
  parallel_chunks(bucket.size(), nc, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    IntersectChunk& out = chunks[first + c];
    for (std::size_t k = begin; k < end; ++k) {
      const auto [u, v] = oel.edges[bucket[k]];
      const auto a = oel.out_neighbors(u);
      const auto b = oel.out_neighbors(v);
      out.work += std::min(a.size(), b.size());
      if (enumerate) {
        out.count += kernel(a, b, [&](VertexId w) { out.triangles.push_back(Triangle::canonical(u, v, w)); });
      } else {
        out.count += kernel(a, b, [](VertexId) {});
      }
    }
  });
}

}  // namespace detail

inline TriangleReport count_triangles_intersect(const Graph& g, const IntersectOptions& opts = {}) {
  TriangleReport report;
  PhaseTimer timer(report.timings);
  const unsigned threads = resolve_threads(opts.threads);

  const OrientedEdgeList oel = form_filtered_edge_list(g);
  timer.lap("filter");

  const IntersectBuckets buckets = bucket_edges(oel, opts.threshold);
  timer.lap("partition");

  auto merge = [](auto a, auto b, auto&& f) { return intersect_merge(a, b, f); };
  auto search = [](auto a, auto b, auto&& f) { return intersect_search(a, b, f); };

  std::vector<detail::IntersectChunk> chunks;
  const bool large_by_search = opts.strategy != IntersectStrategy::kMerge;
  const bool small_by_search = opts.strategy == IntersectStrategy::kSearch;
  if (large_by_search)
    detail::intersect_bucket(oel, buckets.large, opts.enumerate, threads, search, chunks);
  else
    detail::intersect_bucket(oel, buckets.large, opts.enumerate, threads, merge, chunks);
  if (small_by_search)
    detail::intersect_bucket(oel, buckets.small, opts.enumerate, threads, search, chunks);
  else
    detail::intersect_bucket(oel, buckets.small, opts.enumerate, threads, merge, chunks);
  timer.lap("intersect");

  for (const auto& c : chunks) {
    report.count += c.count;
    report.workload.intersection_work += c.work;
  }
  if (opts.enumerate) {
    std::vector<Triangle> all;
    all.reserve(report.count);
    for (auto& c : chunks) all.insert(all.end(), c.triangles.begin(), c.triangles.end());
    std::sort(all.begin(), all.end());
    report.triangles = std::move(all);
  }
  timer.lap("reduce");

  auto& w = report.workload;
  w.oriented_edges = oel.edges.size();
  w.intersections = oel.edges.size();
  w.small_bucket = buckets.small.size();
  w.large_bucket = buckets.large.size();
  for (VertexId u : g.vertices()) {
    const VertexId du = g.degree(u);
    w.ssd += std::uint64_t{du} * du;
    for (VertexId v : g.neighbors(u)) w.unfiltered_work += std::min(du, g.degree(v));
  }
  return report;
}

}  // namespace tricount
