#pragma once

// Reproducible synthetic graphs.
//
// All randomness comes from SplitMix64 (Steele, Lea, Flood 2014): state
// advances by 0x9E3779B97F4A7C15 and each output is the state passed through
// the finalizer below. Uniform doubles take the top 53 bits. Porting these
// three lines reproduces every graph bit for bit in any language.

#include <cmath>
#include <cstdint>
#include <vector>

#include "tricount/graph.hpp"

namespace tricount {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound), bound > 0. Modulo bias is irrelevant at test sizes.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Erdős–Rényi G(n, p): every pair independently with probability p. Pairs are
/// visited in lexicographic order (u < v) with geometric skips, so the cost is
/// proportional to the number of edges.
inline Graph gnp_graph(std::uint64_t n, double p, std::uint64_t seed) {
  std::vector<Edge> edges;
  if (n >= 2 && p > 0.0) {
    SplitMix64 rng(seed);
    if (p >= 1.0) {
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
      const double log_q = std::log1p(-p);
      // Walk pair index v (second endpoint) and w (first endpoint), w < v.
      std::int64_t v = 1, w = -1;
      const auto nn = static_cast<std::int64_t>(n);
      for (;;) {
        const double r = 1.0 - rng.uniform();  // (0, 1]
        w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
        while (w >= v && v < nn) {
          w -= v;
          ++v;
        }
        if (v >= nn) break;
        edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
      }
    }
  }
  return build_graph(edges, n);
}

inline Graph path_graph(std::uint64_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return build_graph(edges, n);
}

/// Center 0 joined to `leaves` leaves.
inline Graph star_graph(std::uint64_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build_graph(edges, leaves + 1);
}

inline Graph complete_graph(std::uint64_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(edges, n);
}

/// K_{a,b} with parts [0, a) and [a, a + b).
inline Graph complete_bipartite_graph(std::uint64_t a, std::uint64_t b) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = 0; v < b; ++v) edges.emplace_back(u, static_cast<VertexId>(a + v));
  return build_graph(edges, a + b);
}

/// Bipartite graph on parts [0, a) and [a, a + b), each cross pair with probability p.
inline Graph random_bipartite_graph(std::uint64_t a, std::uint64_t b, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = 0; v < b; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, static_cast<VertexId>(a + v));
  return build_graph(edges, a + b);
}

/// Random recursive tree: vertex v > 0 attaches to a uniform earlier vertex.
inline Graph random_tree(std::uint64_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(static_cast<VertexId>(rng.below(v)), v);
  return build_graph(edges, n);
}

/// Vertex-disjoint union; the second graph's ids are shifted past the first.
inline Graph disjoint_union(const Graph& x, const Graph& y) {
  std::vector<Edge> edges = x.undirected_edges();
  const auto shift = static_cast<VertexId>(x.num_vertices());
  for (auto [u, v] : y.undirected_edges()) edges.emplace_back(u + shift, v + shift);
  return build_graph(edges, x.num_vertices() + y.num_vertices());
}

/// The 7-vertex sample graph: triangles {0,1,5}, {0,4,5}, {3,4,5} and a
/// pendant vertex 6 hanging off 2.
inline Graph sample_graph() {
  return build_graph({{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 6}, {3, 4}, {3, 5}, {4, 5}}, 7);
}

}  // namespace tricount
