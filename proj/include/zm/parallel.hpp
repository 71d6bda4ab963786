#pragma once

#include <cstddef>
#include <vector>

#ifdef ZM_HAVE_OPENMP
#include <omp.h>
#endif

namespace zm {

/// Sets the worker count for all parallel kernels. 0 restores the OpenMP default.
void set_thread_count(int threads);
int thread_count();

/// Chunked parallel map-reduce over [0, count). Each chunk is reduced locally
/// in index order and the chunk results are folded left-to-right, so the
/// result is identical for any thread count (all arithmetic here is exact).
/// The serial path (parallel = false) is the reference implementation used by
/// the tests and the benchmark.
template <typename Acc, typename Body, typename Combine>
Acc parallel_reduce(std::size_t count, Acc init, Body&& body, Combine&& combine, bool parallel = true) {
#ifdef ZM_HAVE_OPENMP
    if (parallel && count > 1) {
        const std::size_t chunks = static_cast<std::size_t>(omp_get_max_threads()) * 4;
        const std::size_t chunk = (count + chunks - 1) / chunks;
        std::vector<Acc> partial(chunks, init);
#pragma omp parallel for schedule(static)
        for (std::size_t c = 0; c < chunks; ++c) {
            std::size_t lo = c * chunk;
            std::size_t hi = lo + chunk < count ? lo + chunk : count;
            Acc local = init;
            for (std::size_t i = lo; i < hi; ++i) body(local, i);
            partial[c] = std::move(local);
        }
        Acc acc = init;
        for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
        return acc;
    }
#endif
    (void)parallel;
    Acc acc = init;
    for (std::size_t i = 0; i < count; ++i) body(acc, i);
    return acc;
}

/// Parallel for over [0, count); iterations must be independent.
template <typename Body>
void parallel_for(std::size_t count, Body&& body, bool parallel = true) {
#ifdef ZM_HAVE_OPENMP
    if (parallel && count > 1) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
#endif
    (void)parallel;
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace zm
