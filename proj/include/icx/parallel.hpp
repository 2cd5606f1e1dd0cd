#pragma once

#include <cstddef>
#include <functional>

namespace icx {

// Worker count for parallel scans: ICX_THREADS when set (min 1), otherwise
// hardware concurrency clamped to 8.  All parallel paths in the library
// produce schedule-independent results.
unsigned worker_count();

// Splits [0, n) into one contiguous chunk per worker and runs fn(begin, end,
// worker_index) on each.  Runs inline when a single worker suffices.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& fn);

}  // namespace icx
