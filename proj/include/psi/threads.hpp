// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace psi::threads {

/// Worker count used by parallel loops. Initialized from the PSI_THREADS
/// environment variable when set, otherwise machine parallelism.
int count();

/// Override the worker count (0 restores the default).
void set_count(int n);

/// Run fn(chunk_index, begin, end) over [0, total) split into fixed-size
/// chunks. Chunk boundaries do not depend on the worker count, so callers
/// that combine per-chunk results in chunk order get bit-identical totals
/// for any thread count.
void for_chunks(std::size_t total, std::size_t chunk_size,
                const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace psi::threads
