// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace pf {

// Process-wide worker cap (the CLI --threads flag lands here). Defaults to
// the hardware concurrency.
int worker_count();
void set_worker_count(int n);

// Runs fn(chunk_index, begin, end) over fixed-size chunks of [0, n).
// The chunk decomposition depends only on (n, chunk_size); workers pull
// chunks from an atomic counter, so outputs written per chunk are identical
// for any worker count. Reductions over per-chunk results must be merged in
// chunk-index order by the caller.
void parallel_chunks(size_t n, size_t chunk_size,
                     const std::function<void(size_t chunk_index, size_t begin, size_t end)> &fn);

}  // namespace pf
