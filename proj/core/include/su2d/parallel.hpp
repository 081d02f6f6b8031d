#pragma once

#include <cstddef>
#include <functional>

namespace su2d {

// Runs fn(i) for every i in [0, n) across the available hardware threads,
// splitting the range into contiguous blocks.  fn must only touch state owned
// by its index, so the outcome cannot depend on the schedule; reductions over
// the per-index results stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace su2d
