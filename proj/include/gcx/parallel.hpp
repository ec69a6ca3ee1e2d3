#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcx {

// Parallel kernels in this project follow one pattern: a data-parallel loop
// over independent items, each writing only to its own preallocated slot.
// Results are merged in index order afterwards, so parallel and serial
// execution produce identical output.
//
// jobs == 1 runs the plain serial loop (the reference path used in tests
// and benchmarks); jobs == 0 means use all available threads.
template <typename F>
void parallel_for(std::size_t n, int jobs, F&& body) {
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    body(static_cast<std::size_t>(i));
#else
  (void)jobs;
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

inline int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gcx
