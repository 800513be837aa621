#pragma once

#include <cstddef>
#include <functional>

namespace pgdus {

// Worker count: PGDUS_THREADS if set and positive, otherwise the hardware
// concurrency (PGDUS_THREADS=0 means the same).
unsigned thread_count();

// Runs body(i) for i in [0, count) across thread_count() workers. Each index
// runs exactly once; results written by index make the outcome independent of
// scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pgdus
