#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace hypergiant {

struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 when n < 2
  double standard_error = 0.0;
};

/// Two-pass mean and variance, summed in index order.
SampleSummary summarize(std::span<const double> values);
SampleSummary summarize(std::span<const std::int64_t> values);

inline constexpr double kZ95 = 1.959963984540054;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval for hits successes out of n trials.
Interval wilson_interval(std::int64_t hits, std::int64_t n, double z = kZ95);

/// Half the L1 distance; the shorter vector is padded with zeros.
double total_variation(std::span<const double> p, std::span<const double> q);

/// Normalized histogram of non-negative integers over 0..max_value.
std::vector<double> empirical_distribution(std::span<const std::int64_t> values, std::int64_t max_value);

/// Thread count: explicit request if given, else HYPERGIANT_THREADS, else
/// hardware concurrency (at least 1).
int resolve_threads(std::optional<int> requested = std::nullopt);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
/// handed out by an atomic counter; the first exception is rethrown.
template <class Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < std::min(workers, count); ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hypergiant
