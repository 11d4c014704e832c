#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace laz {

// Caps OpenMP worker count; no-op without OpenMP. Grid kernels assign whole
// Doppler rows to workers, so results do not depend on the cap.
inline void set_max_threads(int t) {
#ifdef _OPENMP
  if (t >= 1) omp_set_num_threads(t);
#else
  (void)t;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Reads the LAZ_KIT_THREADS cap, if set.
inline void apply_thread_env() {
  if (const char* env = std::getenv("LAZ_KIT_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) set_max_threads(t);
  }
}

}  // namespace laz
