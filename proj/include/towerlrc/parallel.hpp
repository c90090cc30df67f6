// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLRC_PARALLEL_HPP
#define TOWERLRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace towerlrc {

/// Runs body(begin, end) over contiguous chunks of [0, count). Chunk
/// boundaries depend only on count and threads, so callers that merge
/// per-chunk results in chunk order get schedule-independent output.
template <typename Body>
void parallel_chunks(std::size_t count, int threads, Body&& body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads > 0 ? threads : 1, count));
  if (workers <= 1) {
    if (count > 0) body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  const std::size_t step = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * step;
    const std::size_t end = std::min(count, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t count, int threads) {
  return std::max<std::size_t>(1, std::min<std::size_t>(threads > 0 ? threads : 1, count));
}

}  // namespace towerlrc

#endif  // TOWERLRC_PARALLEL_HPP
