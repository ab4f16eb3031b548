#pragma once

#include <cstdint>
#include <functional>

namespace dclr {

// Process-wide cap on compute threads used by parallel_for. 0 = hardware
// concurrency. The experiment grid sets this to 1 and parallelizes over
// whole runs instead; change it only between runs.
void set_compute_threads(int n);
int compute_threads();

// Static chunking; chunk i covers a contiguous index range. Work items must
// write disjoint outputs. Any cross-item reduction must be done per chunk and
// combined by the caller in chunk order so results do not depend on thread
// scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& chunk_fn);

// Same, with the chunk index passed through so callers can keep per-chunk
// accumulators and reduce them in a fixed order.
void parallel_for_indexed(std::int64_t n,
                          const std::function<void(int, std::int64_t, std::int64_t)>& chunk_fn);

// Number of chunks parallel_for will use for n items under the current cap.
int parallel_chunks(std::int64_t n);

}  // namespace dclr
