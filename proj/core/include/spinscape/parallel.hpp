#pragma once

#include <cstddef>
#include <functional>

namespace spinscape {

// Worker cap: min(hardware_concurrency, SPINSCAPE_THREADS); the env var value 0
// (or unset) means auto. Always ≥ 1.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work is distributed over worker_count() threads;
// fn must be safe to call concurrently for distinct i. Results must be written
// to pre-sized slots indexed by i so that output order never depends on
// scheduling. Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

} // namespace spinscape
