// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace slicespace {

/// Number of worker threads to use: `requested` if positive, otherwise the
/// SLICESPACE_THREADS environment variable, otherwise the hardware count.
int thread_budget(int requested = 0);

/// Runs fn(i) for i in [0, n). Work items must write to disjoint state; the
/// caller reduces afterwards in index order so results stay bit-stable for
/// any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

}  // namespace slicespace
