#pragma once

#include <cstddef>
#include <functional>

namespace gapcert {

/// Number of worker threads to use: hardware concurrency capped by the
/// GAPCERT_THREADS environment variable (>= 1).
std::size_t thread_budget();

/// Runs fn(i) for i in [0, n). Chunks across the thread budget when n is
/// large enough to pay for the spawn; bodies must be independent.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gapcert
