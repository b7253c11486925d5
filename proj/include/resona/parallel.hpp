#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace resona {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Run fn(begin, end, worker_index) over contiguous chunks of [0, n). With one
// worker the call happens inline on the calling thread.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (workers <= 1 || n <= 1) {
    fn(std::size_t{0}, n, 0u);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  const std::size_t base = n / workers;
  const std::size_t extra = n % workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::size_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t take = base + (w < extra ? 1 : 0);
    const std::size_t end = begin + take;
    threads.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
    begin = end;
  }
  for (std::thread& t : threads) t.join();
}

}  // namespace resona
