#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

// Census kernels run either through the serial reference loop or through the
// OpenMP parallel-for. Workers write into preallocated slots indexed by i, so
// both paths produce bit-identical reports and the tests can compare them.
enum class RunMode { serial, parallel };

template <typename Fn>
void for_each_index(std::size_t count, RunMode mode, Fn&& fn) {
#ifdef _OPENMP
    if (mode == RunMode::parallel) {
        std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                {
                    if (!error) error = std::current_exception();
                }
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace toric
