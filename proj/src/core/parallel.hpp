// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <cstddef>
#include <functional>

namespace amx {

// Worker count: AMX_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

// Runs fn(i) for i in [0, n) on up to worker_count() threads. The first exception thrown
// by any call is rethrown after all workers finish.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace amx
