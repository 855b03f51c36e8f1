#pragma once

#include <cstddef>
#include <functional>

namespace degenlab {

// Number of worker threads: min(hardware, DEGENLAB_THREADS if set, jobs).
std::size_t thread_cap();

// Runs fn(i) for i in [0, n). Each index must write only to its own slot so
// results are independent of scheduling. Falls back to a serial loop when
// the cap is 1 or n is small.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace degenlab
