#ifndef LIECOMB_PARALLEL_HPP
#define LIECOMB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace liecomb {

// Worker count for the exhaustive sweeps: LIECOMB_THREADS if set (>= 1),
// otherwise the hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n) across worker_count() threads, static block
// partition.  Callers own determinism: write results into slot i and merge
// after the call returns.  Exceptions from workers are rethrown (first one
// wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace liecomb

#endif
