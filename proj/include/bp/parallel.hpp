#pragma once
/**
 * @file parallel.hpp
 * @brief Minimal deterministic work sharing for embarrassingly parallel
 *        sweeps: a blocking index-range dispatcher with a worker count taken
 *        from an explicit request, the BP_JOBS environment variable, or the
 *        hardware concurrency, in that order.
 */

#include <functional>

namespace bp {

/**
 * Effective worker count.  A positive `requested` wins; otherwise a positive
 * integer in the BP_JOBS environment variable; otherwise the hardware
 * concurrency (at least 1).  Malformed BP_JOBS values are ignored.
 */
int effective_jobs(int requested = 0);

/**
 * Invoke fn(i) for every i in [0, n) across effective_jobs(jobs) threads.
 * Indices are strided so the assignment is deterministic; fn must be safe to
 * call concurrently and should write only to per-index slots.  Blocks until
 * all work finishes.  The first exception thrown by any worker is rethrown
 * after the join.
 */
void parallel_for(long n, const std::function<void(long)>& fn, int jobs = 0);

}  // namespace bp
