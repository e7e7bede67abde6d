#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricount/error.hpp"

namespace tricount {

using VertexId = std::uint32_t;
using EdgeOffset = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::uint64_t kMaxVertices = std::numeric_limits<VertexId>::max();

/// Immutable undirected simple graph in CSR form.
///
/// Every undirected edge {u, v} is stored twice (v in u's slice and u in v's
/// slice), so num_directed_edges() is always even. Slices are strictly
/// increasing and never contain the owning vertex.
class Graph {
 public:
  Graph() : offsets_{0} {}

  /// Adopts a CSR pair after checking every invariant (O(m log d)).
  Graph(std::vector<EdgeOffset> row_offsets, std::vector<VertexId> column_indices)
      : offsets_(std::move(row_offsets)), indices_(std::move(column_indices)) {
    validate();
  }

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  EdgeOffset num_directed_edges() const noexcept { return offsets_.back(); }
  EdgeOffset num_edges() const noexcept { return num_directed_edges() / 2; }

  VertexId degree(VertexId v) const noexcept {
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {indices_.data() + offsets_[v], indices_.data() + offsets_[v + 1]};
  }

  bool has_edge(VertexId u, VertexId v) const noexcept {
    auto n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  std::span<const EdgeOffset> row_offsets() const noexcept { return offsets_; }
  std::span<const VertexId> column_indices() const noexcept { return indices_; }

  auto vertices() const noexcept {
    return std::views::iota(VertexId{0}, static_cast<VertexId>(num_vertices()));
  }

  /// Each undirected edge once, as (u, v) with u < v, in CSR order.
  std::vector<Edge> undirected_edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (VertexId u : vertices())
      for (VertexId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  struct Unchecked {};
  Graph(Unchecked, std::vector<EdgeOffset> row_offsets, std::vector<VertexId> column_indices)
      : offsets_(std::move(row_offsets)), indices_(std::move(column_indices)) {}

  void validate() const {
    if (offsets_.empty() || offsets_.front() != 0)
      throw InputError("row_offsets must start with 0");
    if (offsets_.size() - 1 > kMaxVertices)
      throw InputError("too many vertices for 32-bit ids");
    if (offsets_.back() != indices_.size())
      throw InputError("row_offsets.back() does not match column_indices size");
    const std::size_t n = num_vertices();
    for (std::size_t v = 0; v < n; ++v) {
      if (offsets_[v] > offsets_[v + 1])
        throw InputError("row_offsets not monotone at vertex " + std::to_string(v));
    }
    for (std::size_t v = 0; v < n; ++v) {
      const auto u = static_cast<VertexId>(v);
      auto adj = neighbors(u);
      for (std::size_t k = 0; k < adj.size(); ++k) {
        const VertexId w = adj[k];
        if (w >= n) throw InputError("neighbor id out of range at vertex " + std::to_string(v));
        if (w == u) throw InputError("self-loop at vertex " + std::to_string(v));
        if (k > 0 && adj[k - 1] >= w)
          throw InputError("adjacency of vertex " + std::to_string(v) + " not strictly increasing");
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      for (VertexId w : neighbors(static_cast<VertexId>(v)))
        if (!has_edge(w, static_cast<VertexId>(v)))
          throw InputError("asymmetric edge " + std::to_string(v) + "->" + std::to_string(w));
  }

  template <typename Range>
  friend Graph build_graph(const Range& edges, std::uint64_t n);
  friend struct GraphAccess;

  std::vector<EdgeOffset> offsets_;
  std::vector<VertexId> indices_;
};

// Internal construction path for routines that produce valid CSR by
// construction (permutation, subgraph extraction).
struct GraphAccess {
  static Graph adopt(std::vector<EdgeOffset> row_offsets, std::vector<VertexId> column_indices) {
    return Graph(Graph::Unchecked{}, std::move(row_offsets), std::move(column_indices));
  }
};

/// Builds a clean Graph from raw vertex pairs: drops self-loops, inserts both
/// directions, removes duplicates and sorts every slice. `edges` is any range
/// of pair-like values with integral members.
template <typename Range>
Graph build_graph(const Range& edges, std::uint64_t n) {
  if (n > kMaxVertices) throw InputError("vertex count exceeds 32-bit id space");
  auto check = [n](const auto& e) {
    if (std::cmp_less(e.first, 0) || std::cmp_less(e.second, 0) ||
        std::cmp_greater_equal(e.first, n) || std::cmp_greater_equal(e.second, n))
      throw InputError("edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                       ") out of range for " + std::to_string(n) + " vertices");
  };

  std::vector<EdgeOffset> offsets(n + 1, 0);
  for (const auto& e : edges) {
    check(e);
    if (e.first == e.second) continue;
    ++offsets[static_cast<std::size_t>(e.first) + 1];
    ++offsets[static_cast<std::size_t>(e.second) + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  std::vector<VertexId> indices(offsets.back());
  std::vector<EdgeOffset> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) {
    if (e.first == e.second) continue;
    const auto u = static_cast<VertexId>(e.first);
    const auto v = static_cast<VertexId>(e.second);
    indices[cursor[u]++] = v;
    indices[cursor[v]++] = u;
  }

  // Sort and dedup each slice in place, then compact.
  std::vector<EdgeOffset> clean(n + 1, 0);
  EdgeOffset write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = indices.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = indices.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    auto out = indices.begin() + static_cast<std::ptrdiff_t>(write);
    out = std::move(first, last, out);
    write = static_cast<EdgeOffset>(out - indices.begin());
    clean[v + 1] = write;
  }
  indices.resize(write);
  indices.shrink_to_fit();
  return Graph(Graph::Unchecked{}, std::move(clean), std::move(indices));
}

inline Graph build_graph(std::initializer_list<Edge> edges, std::uint64_t n) {
  return build_graph(std::vector<Edge>(edges), n);
}

struct DegreeStats {
  std::vector<VertexId> degrees;
  VertexId max_degree = 0;
  std::uint64_t ssd = 0;  // sum of squared degrees
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.degrees.resize(g.num_vertices());
  for (VertexId v : g.vertices()) {
    const VertexId d = g.degree(v);
    s.degrees[v] = d;
    s.max_degree = std::max(s.max_degree, d);
    s.ssd += std::uint64_t{d} * d;
  }
  return s;
}

/// A relabeling of vertices. forward[old] = new, inverse[new] = old.
struct Permutation {
  std::vector<VertexId> forward;
  std::vector<VertexId> inverse;

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.forward.resize(n);
    std::iota(p.forward.begin(), p.forward.end(), VertexId{0});
    p.inverse = p.forward;
    return p;
  }

  /// Builds the permutation whose inverse (new -> old) is `order`.
  static Permutation from_order(std::vector<VertexId> order) {
    Permutation p;
    p.inverse = std::move(order);
    p.forward.assign(p.inverse.size(), 0);
    for (std::size_t i = 0; i < p.inverse.size(); ++i) p.forward[p.inverse[i]] = static_cast<VertexId>(i);
    return p;
  }

  std::size_t size() const noexcept { return forward.size(); }

  bool is_valid() const {
    if (forward.size() != inverse.size()) return false;
    for (std::size_t i = 0; i < forward.size(); ++i) {
      if (forward[i] >= forward.size() || inverse[i] >= inverse.size()) return false;
      if (inverse[forward[i]] != i || forward[inverse[i]] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Orders vertices by ascending degree; equal degrees keep ascending id.
inline Permutation degree_order_permutation(std::span<const VertexId> degrees) {
  std::vector<VertexId> order(degrees.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&degrees](VertexId a, VertexId b) { return degrees[a] < degrees[b]; });
  return Permutation::from_order(std::move(order));
}

inline Permutation degree_order_permutation(const Graph& g) {
  return degree_order_permutation(degree_stats(g).degrees);
}

inline Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.num_vertices())
    throw InputError("permutation size " + std::to_string(p.size()) + " does not match " +
                     std::to_string(g.num_vertices()) + " vertices");
  if (!p.is_valid()) throw InputError("permutation is not a bijection");

  const std::size_t n = g.num_vertices();
  std::vector<EdgeOffset> offsets(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + g.degree(p.inverse[i]);
  std::vector<VertexId> indices(offsets.back());
  for (std::size_t i = 0; i < n; ++i) {
    auto out = indices.begin() + static_cast<std::ptrdiff_t>(offsets[i]);
    auto adj = g.neighbors(p.inverse[i]);
    auto end = std::transform(adj.begin(), adj.end(), out, [&p](VertexId w) { return p.forward[w]; });
    std::sort(out, end);
  }
  return GraphAccess::adopt(std::move(offsets), std::move(indices));
}

}  // namespace tricount
