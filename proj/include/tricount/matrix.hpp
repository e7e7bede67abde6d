#pragma once

// Triangle counting through B = L * U and C = A ∘ B, count = sum(C) / 2.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/parallel.hpp"
#include "tricount/report.hpp"
#include "tricount/sparse_matrix.hpp"

namespace tricount {

enum class MatrixStrategy {
  kPlain,   // materialize B, then C, then sum
  kMasked,  // B evaluated only on A's pattern
  kFused,   // upper-triangular dot products summed directly, no B or C
};

struct MatrixOptions {
  MatrixStrategy strategy = MatrixStrategy::kFused;
  bool permute = true;
  unsigned threads = 0;
};

struct MatrixStages {
  SparseMatrix a, l, u, b, c;
};

/// All intermediate matrices of the plain strategy, for inspection.
inline MatrixStages compute_matrix_stages(const Graph& g, bool permute = false, unsigned threads = 1) {
  MatrixStages s;
  s.a = adjacency_matrix(permute ? apply_permutation(g, degree_order_permutation(g)) : g);
  auto [lower, upper] = split_triangular(s.a);
  s.l = std::move(lower);
  s.u = std::move(upper);
  s.b = spgemm(s.l, s.u, nullptr, threads);
  s.c = hadamard(s.a, s.b);
  return s;
}

inline TriangleReport count_triangles_matrix(const Graph& g, const MatrixOptions& opts = {}) {
  TriangleReport report;
  PhaseTimer timer(report.timings);
  const unsigned threads = resolve_threads(opts.threads);
  auto& w = report.workload;

  Graph permuted;
  if (opts.permute) {
    permuted = apply_permutation(g, degree_order_permutation(g));
    timer.lap("permute");
  }
  const Graph& h = opts.permute ? permuted : g;

  const SparseMatrix a = adjacency_matrix(h);
  auto [l, u] = split_triangular(a);
  timer.lap("split");

  switch (opts.strategy) {
    case MatrixStrategy::kPlain:
    case MatrixStrategy::kMasked: {
      const bool masked = opts.strategy == MatrixStrategy::kMasked;
      const SparseMatrix b = spgemm(l, u, masked ? &a : nullptr, threads);
      timer.lap(masked ? "masked-spgemm" : "spgemm");
      const SparseMatrix c = hadamard(a, b);
      timer.lap("hadamard");
      const std::uint64_t total = c.sum();
      if (total % 2 != 0) throw std::logic_error("sum of A∘LU is odd");
      report.count = total / 2;
      timer.lap("reduce");
      w.product_nonzeros = b.nnz();
      w.intersections = masked ? a.nnz() : 0;
      break;
    }
    case MatrixStrategy::kFused: {
      // C is symmetric, so summing its upper triangle gives sum(C) / 2.
      const SparseMatrix ut = transpose(u);
      timer.lap("transpose");
      const std::size_t n = a.rows();
      std::vector<std::uint64_t> partial(chunk_count(n, threads), 0);
      parallel_chunks(n, partial.size(), threads,
                      [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                        std::uint64_t local = 0;
                        for (std::size_t i = begin; i < end; ++i)
                          for (VertexId j : u.row_columns(i))
                            local += sparse_dot(l.row_columns(i), l.row_values(i),
                                                ut.row_columns(j), ut.row_values(j));
                        partial[chunk] = local;
                      });
      for (std::uint64_t p : partial) report.count += p;
      timer.lap("fused-reduce");
      w.intersections = u.nnz();
      break;
    }
  }

  for (VertexId v : h.vertices()) {
    const VertexId d = h.degree(v);
    w.ssd += std::uint64_t{d} * d;
  }
  return report;
}

}  // namespace tricount
