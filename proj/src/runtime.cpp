#include "slicelab/runtime.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace slicelab {

namespace {
std::atomic<std::size_t> g_threads{0};
}

std::uint64_t work_limit(std::uint64_t default_limit) {
  const char* env = std::getenv("SLICELAB_MAX_WORK");
  if (env == nullptr || *env == '\0') return default_limit;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) return default_limit;
  return static_cast<std::uint64_t>(value);
}

void require_work(std::uint64_t work, std::uint64_t default_limit, const std::string& what) {
  std::uint64_t limit = work_limit(default_limit);
  if (work > limit) {
    throw GuardError(what + ": work " + std::to_string(work) + " exceeds guard " +
                     std::to_string(limit) + " (set SLICELAB_MAX_WORK to override)");
  }
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below: bound must be positive");
  // Largest multiple of bound that fits; values above it are rejected.
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

void set_thread_count(std::size_t threads) { g_threads.store(threads); }

std::size_t thread_count() {
  std::size_t t = g_threads.load();
  if (t != 0) return t;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_chunks(std::uint64_t total, std::size_t chunks,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
  if (total == 0) return;
  if (chunks == 0) chunks = 1;
  if (chunks > total) chunks = static_cast<std::size_t>(total);
  auto bounds = [&](std::size_t c) {
    std::uint64_t base = total / chunks, extra = total % chunks;
    std::uint64_t begin = c * base + std::min<std::uint64_t>(c, extra);
    std::uint64_t end = begin + base + (c < extra ? 1 : 0);
    return std::pair{begin, end};
  };
  std::size_t workers = std::min(thread_count(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      body(c, b, e);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t c = next.fetch_add(1);
        if (c >= chunks) return;
        try {
          auto [b, e] = bounds(c);
          body(c, b, e);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace slicelab
