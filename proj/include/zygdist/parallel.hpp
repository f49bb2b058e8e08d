#pragma once

#include <cstddef>
#include <functional>

namespace zyg {

/// Sets the worker count used by parallel_for; 0 selects the hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs fn(i) for every i in [0, n), split into contiguous chunks over the
/// worker threads. fn may only write state owned by index i, so results never
/// depend on the thread count. The first exception by chunk order is rethrown.
/// Calls from inside a worker run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace zyg
