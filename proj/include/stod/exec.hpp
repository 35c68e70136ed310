#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stod {

// Execution policy for the data-parallel kernels (Gram blocks, batched
// sequence encoding, GCN forwards, per-sample gradient evaluation).
// Every kernel has a serial path and an OpenMP path that produce
// bit-identical results: work items are independent and the arithmetic
// inside one item is sequential either way.
enum class Exec { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace stod
