#pragma once

#include <cstddef>
#include <functional>

namespace toric {

// Worker-pool bound used by parallel loops; 0 restores the hardware default.
void set_default_jobs(unsigned n);
unsigned default_jobs();

// Runs fn(i) for i in [0, count) on up to `jobs` threads (default bound when
// jobs == 0). Results must be written to disjoint slots; the aggregate is
// deterministic regardless of schedule. The first worker exception is
// rethrown after all threads join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned jobs = 0);

}  // namespace toric
