#pragma once

#include <cstddef>
#include <functional>

namespace symqaoa {

/// Thread count resolution: explicit request > SYMQAOA_THREADS env var >
/// hardware concurrency. Always at least 1.
int resolve_thread_count(int requested);

/// Runs body(i) for i in [0, n) on a transient worker pool. Results must be
/// written to per-index slots; iteration order is unspecified but the set of
/// indices is exact. The first exception thrown by any worker is rethrown
/// after all workers join.
void parallel_for(std::size_t n, int n_threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace symqaoa
