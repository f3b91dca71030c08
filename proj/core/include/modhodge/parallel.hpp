#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace modhodge {

/// Worker count from MODHODGE_WORKERS, else the hardware concurrency.
inline unsigned defaultWorkers() {
  if (const char* env = std::getenv("MODHODGE_WORKERS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Applies fn to every item on a pool of threads. Results keep the input
/// order; the first exception thrown by fn is rethrown.
template <class T, class Fn>
auto parallelMap(const std::vector<T>& items, Fn fn, unsigned workers = 0)
    -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  if (workers == 0) workers = defaultWorkers();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto work = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      try {
        slots[k].emplace(fn(items[k]));
      } catch (...) {
        std::lock_guard lock(errorMutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace modhodge
