#pragma once

// Minimal deterministic task runner.  Tasks are pure; results are collected
// by index so reductions never depend on worker timing.  The CONEJSR_THREADS
// environment variable caps the worker count.

#include <cstddef>
#include <functional>

namespace conejsr {

/// Worker cap: min(CONEJSR_THREADS if set, hardware concurrency), at least 1.
std::size_t worker_limit();

/// Runs fn(i) for i in [0, n) on up to worker_limit() threads.  fn must be
/// safe to call concurrently for distinct i; callers collect outputs into
/// index-addressed slots.
void parallel_for_indexed(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace conejsr
