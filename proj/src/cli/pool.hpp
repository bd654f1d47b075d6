#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bethe::cli {

/// Worker count from BETHE_WORKERS (default 1, clamped to [1, 64]).
inline unsigned worker_count() {
  const char* env = std::getenv("BETHE_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  long v = std::strtol(env, nullptr, 10);
  if (v < 1) return 1;
  return static_cast<unsigned>(std::min(v, 64L));
}

/// Runs task(i) for i < n on the pool; results come back in index order. The
/// first exception (by index) is rethrown after all workers stop.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& task) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace bethe::cli
