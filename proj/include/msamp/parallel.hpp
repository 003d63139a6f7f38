#pragma once

#include <exception>
#include <utility>

namespace msamp {

enum class ExecMode { Serial, Parallel };

/// Worker count: hardware threads capped by the MS_THREADS environment
/// variable (values < 1 are treated as 1).
int max_threads();

namespace detail {
void run_indexed(int n, void* ctx, void (*body)(void*, int), int threads);
}

/// Index-parallel loop over [0, n).
///
/// Bodies must only write state owned by their index (and derive any
/// randomness from a per-index stream), so Serial and Parallel execution
/// produce bit-identical results. The Serial path is the reference
/// implementation; the parallel tests and the bench tool compare both.
template <typename F>
void parallel_for(int n, F&& body, ExecMode mode = ExecMode::Parallel) {
  const int threads = (mode == ExecMode::Parallel) ? max_threads() : 1;
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  auto trampoline = [](void* ctx, int i) { (*static_cast<F*>(ctx))(i); };
  detail::run_indexed(n, &body, trampoline, threads);
}

}  // namespace msamp
