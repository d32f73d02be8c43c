#include "surfem/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace surfem {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t, std::size_t)> &fn,
                  std::size_t grain) {
  if (n == 0) return;
  threads = std::min<std::size_t>(resolve_threads(threads), (n + grain - 1) / grain);
  if (threads <= 1) {
    fn(0, n);
    return;
  }
  const std::size_t chunk = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto &th : pool) th.join();
}

}  // namespace surfem
