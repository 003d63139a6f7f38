#include "msamp/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msamp {

int max_threads() {
  static const int cached = [] {
    int n = 0;
#ifdef _OPENMP
    n = omp_get_max_threads();
#else
    n = static_cast<int>(std::thread::hardware_concurrency());
#endif
    if (n < 1) n = 1;
    if (const char* env = std::getenv("MS_THREADS")) {
      const int cap = std::atoi(env);
      if (cap >= 1) n = std::min(n, cap);
    }
    return n;
  }();
  return cached;
}

namespace detail {

void run_indexed(int n, void* ctx, void (*body)(void*, int), int threads) {
  std::exception_ptr eptr = nullptr;
  std::mutex eptr_mutex;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    try {
      body(ctx, i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(eptr_mutex);
      if (!eptr) eptr = std::current_exception();
    }
  }
#else
  (void)threads;
  for (int i = 0; i < n; ++i) {
    try {
      body(ctx, i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(eptr_mutex);
      if (!eptr) eptr = std::current_exception();
    }
  }
#endif
  if (eptr) std::rethrow_exception(eptr);
}

}  // namespace detail
}  // namespace msamp
