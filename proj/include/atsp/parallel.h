#pragma once

#include <cstddef>
#include <functional>

namespace atsp {

// Worker count from ATSP_THREADS (a positive integer), else the hardware
// concurrency, else 1.
std::size_t worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads, in contiguous
// chunks. body must only write state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace atsp
