#ifndef CUSHARP_PARALLEL_HPP_
#define CUSHARP_PARALLEL_HPP_

// Execution-mode switch for the hot loops. Every kernel writes each output
// slot from exactly one loop index (disjoint-owner writes), so the OpenMP
// and serial paths produce bit-identical results; the serial path is kept
// as the reference the tests compare against.

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aaad {

enum class ExecMode { Serial, OpenMP };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// Plain indexed loop, parallel or serial. Body must not write outside the
// slots owned by its index.
template <class Body>
inline void for_each_index(ExecMode mode, long n, const Body& body) {
  if (mode == ExecMode::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) body(i);
    return;
#endif
  }
  for (long i = 0; i < n; ++i) body(i);
}

// Max-reduction over doubles. fp max is exact, so the result does not depend
// on the partitioning.
template <class Fn>
inline double max_over_indices(ExecMode mode, long n, double init, const Fn& fn) {
  double acc = init;
  if (mode == ExecMode::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : acc)
    for (long i = 0; i < n; ++i) {
      double v = fn(i);
      if (v > acc) acc = v;
    }
    return acc;
#endif
  }
  for (long i = 0; i < n; ++i) {
    double v = fn(i);
    if (v > acc) acc = v;
  }
  return acc;
}

}  // namespace aaad

#endif  // CUSHARP_PARALLEL_HPP_
