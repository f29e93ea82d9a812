// Worker-count plumbing.  All parallel kernels have a serial reference
// implementation; workers == 1 selects it, workers > 1 selects the OpenMP
// kernel.  Results are identical by contract (tested).
#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline int omp_get_num_threads() { return 1; }
inline void omp_set_num_threads(int) {}
#endif

namespace hurwitz {

// Default worker count: HURWITZ_WORKERS env var if set, else hardware.
inline int default_workers() {
    if (const char* env = std::getenv("HURWITZ_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return omp_get_max_threads();
}

}  // namespace hurwitz
