#pragma once

#include <cstddef>
#include <functional>

namespace vregion {

/// Worker cap: VREGION_THREADS when set (>= 1), hardware concurrency
/// otherwise. Read once per process.
int worker_thread_count();

/// Runs fn over disjoint index chunks covering [0, n). Chunking depends only
/// on n and the worker cap, and chunks write disjoint state, so results are
/// deterministic. Small n runs inline.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace vregion
