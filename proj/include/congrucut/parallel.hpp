#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace congrucut {

// worker count: CONGRUCUT_THREADS if set, otherwise hardware concurrency
unsigned worker_count();

// index-parallel map; each index writes only its own slot, so the result is
// independent of the thread count
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace congrucut
