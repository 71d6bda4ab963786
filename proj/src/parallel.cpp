#include "zm/parallel.hpp"

namespace zm {

void set_thread_count(int threads) {
#ifdef ZM_HAVE_OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

int thread_count() {
#ifdef ZM_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace zm
