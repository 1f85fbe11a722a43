#pragma once

#include <cstddef>
#include <functional>

namespace edgeslicer {

/// Worker cap: EDGE_SLICER_THREADS when set (clamped to >= 1), otherwise
/// the hardware concurrency. Read on every call.
int thread_cap();

/// Runs fn(i) for i in [0, count) on up to thread_cap() workers. Each fn(i)
/// must write only to its own output slot; the iteration-to-thread mapping
/// carries no semantics, so results cannot depend on the worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace edgeslicer
