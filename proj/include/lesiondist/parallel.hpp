#pragma once

#include <cstddef>
#include <functional>

namespace lesiondist {

/// Worker count resolution: explicit request > LESIONDIST_JOBS env > hardware.
int resolve_jobs(int requested);

/// Runs fn(i) for i in [0,n). With jobs > 1 the iterations are distributed over
/// a thread pool; the first exception thrown by any iteration is rethrown.
/// Results must be written to per-index slots so ordering stays deterministic.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace lesiondist
