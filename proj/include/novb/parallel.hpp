#ifndef NOVB_PARALLEL_HPP
#define NOVB_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace novb {

// Runs body(i) for i in [0, n).  When `parallel` is set and OpenMP is
// available the iterations are distributed over threads; results must be
// written to index-addressed slots so the outcome is identical to the serial
// path.  The first exception thrown by any iteration is rethrown after the
// loop (OpenMP may not leak exceptions out of a parallel region).
template <typename Body>
void parallel_for(std::size_t n, bool parallel, Body&& body) {
#ifdef _OPENMP
    if (parallel && n > 1) {
        std::exception_ptr err;
        std::mutex err_mutex;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

} // namespace novb

#endif
