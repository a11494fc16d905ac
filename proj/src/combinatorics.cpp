#include "hypergiant/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypergiant {

namespace {

// Stirling series remainder: lgamma(z) = (z-0.5)ln z - z + ln(2pi)/2 + tail(z).
double stirling_tail(double z) {
  const double z2 = z * z;
  return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - 1.0 / (1680.0 * z2)) / z2) / z2) / z;
}

constexpr double kStirlingFloor = 20.0;
constexpr std::int64_t kDirectSumLimit = 32;

}  // namespace

double SubsetCount::value() const {
  if (exact) return static_cast<double>(*exact);
  return std::exp(log_value);
}

SubsetCount count_subsets(std::int64_t n, std::int64_t k) {
  SubsetCount out;
  if (k < 0 || n < 0 || k > n) {
    out.exact = 0;
    out.log_value = -std::numeric_limits<double>::infinity();
    return out;
  }
  k = std::min(k, n - k);
  out.log_value = log_choose(static_cast<double>(n), k);
  uint128 acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    // acc = C(n, i); C(n, i) * (n - i) is divisible by (i + 1).
    uint128 next = 0;
    if (__builtin_mul_overflow(acc, static_cast<uint128>(n - i), &next)) {
      return out;
    }
    acc = next / static_cast<uint128>(i + 1);
  }
  out.exact = acc;
  return out;
}

double log_falling_factorial(double n, std::int64_t m) {
  if (m <= 0) return 0.0;
  if (m <= kDirectSumLimit) {
    double s = 0.0;
    for (std::int64_t i = 0; i < m; ++i) s += std::log(n - static_cast<double>(i));
    return s;
  }
  // Smallest factors directly until the Stirling tail is accurate.
  double low = n - static_cast<double>(m) + 1.0;
  double s = 0.0;
  while (low < kStirlingFloor && m > 0) {
    s += std::log(low);
    low += 1.0;
    --m;
  }
  if (m == 0) return s;
  const double z1 = n + 1.0;
  const double z2 = low;
  const double span = z1 - z2;
  // (z1-1/2)ln z1 - (z2-1/2)ln z2 rewritten without cancellation.
  const double head = span * std::log(z1) - (z2 - 0.5) * std::log1p(-span / z1);
  return s + head - span + stirling_tail(z1) - stirling_tail(z2);
}

double log_choose(double n, std::int64_t k) {
  if (k < 0 || n < static_cast<double>(k)) return -std::numeric_limits<double>::infinity();
  if (static_cast<double>(k) > n / 2 && n < 9.0e15) k = static_cast<std::int64_t>(n) - k;
  return log_falling_factorial(n, k) - std::lgamma(static_cast<double>(k) + 1.0);
}

double choose_real(double n, std::int64_t k) {
  if (k < 0 || n < static_cast<double>(k)) return 0.0;
  if (k <= 64) {
    double c = 1.0;
    for (std::int64_t i = 0; i < k; ++i) c = c * (n - static_cast<double>(i)) / static_cast<double>(i + 1);
    return std::round(c);
  }
  return std::round(std::exp(log_choose(n, k)));
}

std::string to_string(uint128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace hypergiant
