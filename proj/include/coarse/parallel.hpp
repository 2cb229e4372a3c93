#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace coarse {

/// Number of worker threads for per-point / per-element loops. Results never
/// depend on it.
struct Parallelism {
  std::size_t threads = 1;
};

/// Splits [0, n) into contiguous chunks and calls body(chunk, begin, end) for
/// each, on up to par.threads threads. Returns the number of chunks.
template <class Body>
std::size_t parallel_chunks(std::size_t n, const Parallelism& par, Body&& body) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min(par.threads, n));
  if (chunks == 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    workers.emplace_back([&body, c, begin, end] { body(c, begin, end); });
  }
  for (auto& w : workers) w.join();
  return chunks;
}

}  // namespace coarse
