#pragma once

#include <cstddef>
#include <functional>

namespace sdlab {

// Runs fn(0) .. fn(n-1), possibly across threads. Thread count comes from
// the SDLAB_THREADS environment variable (0 or unset = hardware), clamped
// to n. Results must be written to disjoint slots; the iteration order is
// unspecified but every index runs exactly once.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

int configured_thread_count();

}  // namespace sdlab
