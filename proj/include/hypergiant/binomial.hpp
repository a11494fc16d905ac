#pragma once

#include <cstdint>

#include "hypergiant/rng.hpp"

namespace hypergiant {

/// Largest mean n p accepted by the exact sampler.
inline constexpr double kMaxBinomialMean = 1e9;

/// Exact Binomial(n, p) by inversion started at the mode.
///
/// n is carried as a double so that subset counts far beyond 64 bits can be
/// used directly; it is exact below 2^53. The pmf at the mode is evaluated
/// in log space, neighbours by the ratio recurrence, and values are visited
/// in a fixed order (larger neighbouring mass first) until the uniform draw
/// is covered. A rounding deficit in total mass triggers a redraw, so the
/// output law is the pmf itself; no normal or Poisson approximation is used.
class BinomialDistribution {
 public:
  BinomialDistribution() = default;
  BinomialDistribution(double n, double p);

  std::uint64_t operator()(RngStream& rng) const;

  double n() const { return n_; }
  double p() const { return p_; }
  double mean() const { return n_ * p_; }
  std::uint64_t mode() const { return mode_; }
  double pmf_at_mode() const { return pmf_mode_; }

 private:
  double n_ = 0.0;
  double p_ = 0.0;
  double odds_ = 0.0;
  std::uint64_t mode_ = 0;
  double pmf_mode_ = 1.0;
};

std::uint64_t sample_binomial(double n, double p, RngStream& rng);

/// ln P(X = k) for X ~ Binomial(n, p).
double binomial_log_pmf(double n, double p, std::uint64_t k);

}  // namespace hypergiant
