#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tricount {

/// Maps a requested worker count to an actual one; 0 means "all hardware
/// threads".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Number of chunks used to split `n` items for `threads` workers. Results
/// that are gathered per chunk and concatenated in chunk order do not depend
/// on this value, only load balance does.
inline std::size_t chunk_count(std::size_t n, unsigned threads) {
  if (n == 0) return 0;
  return std::min<std::size_t>(n, std::size_t{threads} * 8);
}

/// Runs body(chunk, begin, end) for every chunk of [0, n). Chunks are
/// contiguous and their boundaries depend only on n and num_chunks. Workers
/// pull chunks dynamically; the first exception thrown by any body is
/// rethrown on the calling thread after all workers have joined.
template <typename Body>
void parallel_chunks(std::size_t n, std::size_t num_chunks, unsigned threads,
                     Body&& body) {
  if (n == 0 || num_chunks == 0) return;
  num_chunks = std::min(num_chunks, n);
  auto bounds = [&](std::size_t c) { return n * c / num_chunks; };

  threads = std::min<std::size_t>(resolve_threads(threads), num_chunks);
  if (threads <= 1) {
    for (std::size_t c = 0; c < num_chunks; ++c) body(c, bounds(c), bounds(c + 1));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= num_chunks) return;
      try {
        body(c, bounds(c), bounds(c + 1));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(num_chunks, std::memory_order_relaxed);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
}

/// Convenience wrapper: per-item body(i), default chunking.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  const unsigned t = resolve_threads(threads);
  parallel_chunks(n, chunk_count(n, t), t,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) body(i);
                  });
}

}  // namespace tricount
