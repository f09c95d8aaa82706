#pragma once

#include <cstddef>
#include <functional>

namespace kneser {

/// Worker count from KNESER_THREADS (default 1, clamped to [1, 256]).
int thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, n) on up to
/// thread_count() threads. Chunk boundaries do not depend on the thread
/// count, so callers that write per-index results stay deterministic. An
/// exception thrown by body stops the remaining chunks and is rethrown.
void parallel_chunks(std::size_t n, std::size_t chunk, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace kneser
