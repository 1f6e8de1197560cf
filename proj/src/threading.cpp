#include "discrim/threading.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace discrim {

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_count(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

void apply_thread_env() {
    const char* raw = std::getenv("DISCRIM_THREADS");
    if (raw == nullptr) return;
    int threads = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, threads);
    if (ec == std::errc() && ptr == end && threads > 0) set_thread_count(threads);
}

}  // namespace discrim
