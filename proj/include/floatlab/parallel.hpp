#pragma once

#include <cstddef>
#include <functional>

namespace floatlab {

// Number of worker threads used by parallel_for. Defaults to the hardware
// concurrency, capped by the FLOATLAB_THREADS environment variable.
unsigned worker_threads();

// Runs fn(i) for i in [0, count). Work items must be independent; callers
// write into preallocated slots so the result does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace floatlab
