#pragma once

#include <cstddef>
#include <functional>

namespace boxcode {

/// Worker count: BOXCODE_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(worker, begin, end) on disjoint contiguous chunks covering
/// [0, count). Chunk k always goes to worker k, so callers can merge
/// per-worker results in worker order for deterministic output.
void parallel_chunks(std::size_t count, const std::function<void(unsigned, std::size_t, std::size_t)>& body);

}  // namespace boxcode
