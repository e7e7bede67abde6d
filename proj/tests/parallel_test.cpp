#include <atomic>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "tricount/parallel.hpp"

namespace tricount {
namespace {

TEST(ParallelChunks, CoversRangeExactlyOnce) {
  for (unsigned threads : {1u, 2u, 8u}) {
    for (std::size_t n : {0u, 1u, 7u, 1000u}) {
      std::vector<std::atomic<int>> hits(n);
      parallel_chunks(n, chunk_count(n, threads), threads, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) hits[i]++;
      });
      for (auto& h : hits) EXPECT_EQ(h.load(), 1);
    }
  }
}

TEST(ParallelChunks, ChunkBoundariesAreContiguous) {
  std::vector<std::pair<std::size_t, std::size_t>> bounds(10);
  parallel_chunks(103, 10, 4, [&](std::size_t c, std::size_t b, std::size_t e) { bounds[c] = {b, e}; });
  EXPECT_EQ(bounds.front().first, 0u);
  EXPECT_EQ(bounds.back().second, 103u);
  for (std::size_t c = 1; c < bounds.size(); ++c) EXPECT_EQ(bounds[c - 1].second, bounds[c].first);
}

TEST(ParallelChunks, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(100, 4, [](std::size_t i) {
                 if (i == 57) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(ResolveThreads, ZeroMeansHardware) {
  EXPECT_GE(resolve_threads(0), 1u);
  EXPECT_EQ(resolve_threads(3), 3u);
}

}  // namespace
}  // namespace tricount
