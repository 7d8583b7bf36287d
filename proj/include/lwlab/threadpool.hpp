#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lwlab {

/// Runs fn(begin, end) over [0, n) in fixed chunks pulled from a shared
/// counter. Chunk boundaries depend only on (n, chunk), never on the thread
/// count, so any output written into per-index slots is bit-identical for
/// every value of n_threads.
template <class Fn>
void parallel_for_chunks(std::size_t n, std::size_t chunk, unsigned n_threads, Fn&& fn) {
  if (n == 0) return;
  chunk = std::max<std::size_t>(chunk, 1);
  std::size_t n_chunks = (n + chunk - 1) / chunk;
  unsigned workers = std::max(1u, n_threads);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_chunks));

  if (workers == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c)
      fn(c * chunk, std::min(n, (c + 1) * chunk));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        fn(c * chunk, std::min(n, (c + 1) * chunk));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

inline unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace lwlab
