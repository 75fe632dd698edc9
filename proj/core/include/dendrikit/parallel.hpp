#pragma once

#include <cstdint>
#include <functional>

namespace dendrikit {

/// Worker count: min(hardware, DENDRIKIT_THREADS when set), at least 1.
int worker_count();

/// Runs fn(begin, end, slot) over a partition of [0, total) into one
/// contiguous chunk per worker. Slots are 0..workers-1 in ascending range
/// order, so per-slot results concatenate deterministically.
void parallel_chunks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn);

}  // namespace dendrikit
