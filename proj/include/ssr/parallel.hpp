#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace ssr {

/// Worker count: SSR_THREADS if set and positive, else hardware concurrency.
unsigned thread_budget();

/// Runs body(i) for i in [0, count). Each index runs exactly once; callers
/// write results into per-index slots so output order never depends on
/// scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Independent per-task seed derived from a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace ssr
