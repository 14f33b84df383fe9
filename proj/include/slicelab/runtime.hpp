#pragma once

// Shared runtime pieces: error types, work guards, deterministic RNG and
// chunked parallel execution.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace slicelab {

/// Precondition or domain violation raised by any module.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A feasibility or size guard refused the request.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Returns the work limit for a guard. SLICELAB_MAX_WORK, when set to a
/// positive integer, replaces the built-in default.
std::uint64_t work_limit(std::uint64_t default_limit);

/// Throws GuardError naming `what` if `work` exceeds the guard.
void require_work(std::uint64_t work, std::uint64_t default_limit, const std::string& what);

/// Seeded generator whose streams are identical on every platform: the
/// standard distributions are avoided because their output is
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound) by rejection sampling.
  std::uint64_t below(std::uint64_t bound);

  bool bit() { return (engine_() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Caps the number of worker threads used by parallel sections (0 restores
/// the default, the machine's hardware concurrency).
void set_thread_count(std::size_t threads);
std::size_t thread_count();

/// Splits [0, total) into contiguous chunks and runs `body(chunk, begin, end)`
/// for each one, possibly concurrently. Chunk boundaries depend only on
/// `total` and `chunks`, never on the thread count, so callers that merge
/// per-chunk results in chunk order get identical output for any setting.
void parallel_chunks(std::uint64_t total, std::size_t chunks,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

}  // namespace slicelab
