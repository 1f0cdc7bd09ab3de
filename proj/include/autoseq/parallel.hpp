#pragma once

#include <cstddef>
#include <functional>

namespace autoseq {

// Upper bound on worker threads used inside the library (0 = hardware).
void set_max_threads(unsigned n);
unsigned max_threads();

// Runs fn(i) for i in [0, n) on up to max_threads() workers. Callers
// write results into per-index slots so the outcome is order independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace autoseq
