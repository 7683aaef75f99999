#pragma once

#include <cstdint>
#include <functional>

namespace aluthge {

/// Thread budget for batch loops: ALUTHGE_LAB_THREADS when set (minimum 1),
/// otherwise 1 (serial).
int thread_budget();

/// Runs fn(i) for i in [0, n) across up to thread_budget() threads. Each
/// index is visited exactly once; fn must write only to its own slot.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

} // namespace aluthge
