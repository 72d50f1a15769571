#pragma once

#include <cstddef>

#ifdef WEYLCS_HAVE_OPENMP
#include <omp.h>
#endif

namespace weylcs {

/// Runtime switch between the OpenMP kernels and the serial reference path.
/// Tests run both and compare; the benchmark tool reports timings.
bool parallel_enabled();
void set_parallel_enabled(bool on);

template <typename F>
void parallel_for(std::size_t n, F&& body) {
#ifdef WEYLCS_HAVE_OPENMP
  if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)n; ++i) body((std::size_t)i);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace weylcs
