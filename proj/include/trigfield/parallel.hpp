#pragma once

#include <cstddef>
#include <functional>

namespace trigfield {

/// Worker count: TRIGFIELD_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
int worker_threads();

/// Runs fn(i) for i in [0, n) on up to worker_threads() threads. Each worker
/// inherits the caller's working precision. If any call throws, the exception
/// of the smallest failing index is rethrown after all workers finish.
/// Calls made from inside a worker run sequentially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace trigfield
