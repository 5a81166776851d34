#pragma once

#include <cstddef>
#include <functional>

namespace blackwell {

// Worker count for data-parallel sweeps: BLACKWELL_KIT_THREADS when set to a
// positive integer, otherwise the hardware concurrency, never more than the
// number of jobs and always at least one.
int worker_count(std::size_t jobs);

// Runs fn(0) .. fn(n-1), possibly across threads. The caller owns result
// placement: fn must write only to slots addressed by its own index, so the
// merged outcome is independent of the thread count. Exceptions from workers
// are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace blackwell
