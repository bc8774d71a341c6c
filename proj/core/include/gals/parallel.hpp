#pragma once

#include <cstdint>
#include <functional>

namespace gals {

/// Runs body(0) ... body(count-1) on up to `workers` threads. Work items are
/// independent; callers own any per-index output slots, which makes the
/// aggregate independent of scheduling. The first exception thrown by a body
/// is rethrown on the calling thread after all workers join.
void parallel_for(std::int64_t count, int workers, const std::function<void(std::int64_t)>& body);

}  // namespace gals
