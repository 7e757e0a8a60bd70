#pragma once

#include <cstddef>
#include <functional>

namespace ko {

/// Worker count from CARTAN_ODD_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

/// Runs fn(0) .. fn(count - 1) on worker_count() threads.  Each index runs
/// exactly once; callers write results into per-index slots so the outcome does
/// not depend on scheduling.  The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace ko
