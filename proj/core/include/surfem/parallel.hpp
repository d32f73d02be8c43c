#ifndef SURFEM_PARALLEL_HPP
#define SURFEM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace surfem {

// Number of worker threads implied by a config value: 0 means "use the
// hardware concurrency", anything else is taken literally.
unsigned resolve_threads(unsigned requested);

// Runs fn(begin, end) over disjoint chunks of [0, n) on `threads` workers;
// executes inline when threads <= 1 or the range is small. fn must only touch
// per-chunk state or synchronize on its own.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t, std::size_t)> &fn,
                  std::size_t grain = 64);

}  // namespace surfem

#endif
