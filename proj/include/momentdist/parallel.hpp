#pragma once

#include <cstddef>
#include <functional>

namespace momentdist {

/// Resolves a worker count: a nonzero request wins, then the
/// MOMENTDIST_THREADS environment variable, then hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
/// handed out in contiguous blocks; body must only write to state owned by
/// index i. The first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace momentdist
