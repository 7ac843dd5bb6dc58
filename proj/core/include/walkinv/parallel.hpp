#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace walkinv {

/// Worker count: WALKINV_THREADS when set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
std::size_t thread_count();

/// Calls body(i) for every i in [0, count) using up to `workers` threads.
/// Indices are handed out dynamically; callers write results into slots
/// indexed by i so the outcome does not depend on scheduling. The first
/// exception thrown by body is rethrown after all workers stop.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body,
                  std::size_t workers = thread_count());

}  // namespace walkinv
