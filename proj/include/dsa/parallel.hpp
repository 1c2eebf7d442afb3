#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsa {

// Execution mode for trial batches. Both modes produce identical results:
// every iteration owns its seed-derived stream and writes its own slot, and
// reductions run serially afterwards in index order.
enum class RunMode { serial, parallel };

template <class F>
void parallel_for(std::int64_t n, RunMode mode, F&& body) {
#ifdef _OPENMP
  if (mode == RunMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)mode;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dsa
