#include "hypergiant/stats.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace hypergiant {

namespace {

template <class T>
SampleSummary summarize_impl(std::span<const T> values) {
  SampleSummary s;
  s.n = values.size();
  if (s.n == 0) return s;
  double sum = 0.0;
  for (auto v : values) sum += static_cast<double>(v);
  s.mean = sum / static_cast<double>(s.n);
  if (s.n < 2) return s;
  double squares = 0.0;
  for (auto v : values) {
    const double dev = static_cast<double>(v) - s.mean;
    squares += dev * dev;
  }
  s.variance = squares / static_cast<double>(s.n - 1);
  s.standard_error = std::sqrt(s.variance / static_cast<double>(s.n));
  return s;
}

}  // namespace

SampleSummary summarize(std::span<const double> values) { return summarize_impl(values); }
SampleSummary summarize(std::span<const std::int64_t> values) { return summarize_impl(values); }

Interval wilson_interval(std::int64_t hits, std::int64_t n, double z) {
  if (n <= 0 || hits < 0 || hits > n) throw std::invalid_argument("wilson_interval: need 0 <= hits <= n, n > 0");
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (phat + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
  Interval out{std::max(0.0, centre - half), std::min(1.0, centre + half)};
  if (hits == 0) out.lo = 0.0;
  if (hits == n) out.hi = 1.0;
  return out;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  const std::size_t n = std::max(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    sum += std::abs(a - b);
  }
  return 0.5 * sum;
}

std::vector<double> empirical_distribution(std::span<const std::int64_t> values, std::int64_t max_value) {
  std::vector<double> out(static_cast<std::size_t>(max_value) + 1, 0.0);
  if (values.empty()) return out;
  for (auto v : values) {
    if (v < 0 || v > max_value) throw std::invalid_argument("empirical_distribution: value out of range");
    out[static_cast<std::size_t>(v)] += 1.0;
  }
  for (auto& x : out) x /= static_cast<double>(values.size());
  return out;
}

int resolve_threads(std::optional<int> requested) {
  if (requested) {
    if (*requested < 1) throw std::invalid_argument("threads must be at least 1");
    return *requested;
  }
  if (const char* env = std::getenv("HYPERGIANT_THREADS"); env != nullptr && *env != '\0') {
    int value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) {
      throw std::invalid_argument(std::string("HYPERGIANT_THREADS must be a positive integer (got \"") + env + "\")");
    }
    return value;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace hypergiant
