#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hypergiant {

__extension__ typedef unsigned __int128 uint128;

/// C(n, k) with an exact value when it fits in 128 bits and a log companion
/// that is always populated (-inf for a zero count).
struct SubsetCount {
  std::optional<uint128> exact;
  double log_value = 0.0;

  bool is_zero() const { return exact.has_value() && *exact == 0; }
  /// Nearest double; exact below 2^53.
  double value() const;
};

SubsetCount count_subsets(std::int64_t n, std::int64_t k);

/// ln(n (n-1) ... (n-m+1)) for real n >= m-1 and integer m >= 0, stable for
/// n far larger than m.
double log_falling_factorial(double n, std::int64_t m);

double log_choose(double n, std::int64_t k);

/// Real-valued C(n, k); zero when k < 0 or n < k. Products for k <= 20,
/// log-gamma above.
double choose_real(double n, std::int64_t k);

std::string to_string(uint128 value);

}  // namespace hypergiant
