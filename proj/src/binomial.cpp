#include "hypergiant/binomial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hypergiant/combinatorics.hpp"

namespace hypergiant {

double binomial_log_pmf(double n, double p, std::uint64_t k) {
  const auto kd = static_cast<double>(k);
  if (kd > n) return -std::numeric_limits<double>::infinity();
  if (p == 0.0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (p == 1.0) return kd == n ? 0.0 : -std::numeric_limits<double>::infinity();
  return log_choose(n, static_cast<std::int64_t>(k)) + kd * std::log(p) + (n - kd) * std::log1p(-p);
}

BinomialDistribution::BinomialDistribution(double n, double p) : n_(n), p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial: p must lie in [0, 1] (got " + std::to_string(p) + ")");
  }
  if (!(n >= 0.0) || n != std::floor(n)) throw std::invalid_argument("binomial: n must be a non-negative integer");
  if (n * p > kMaxBinomialMean) {
    throw std::invalid_argument("binomial: mean n p exceeds " + std::to_string(kMaxBinomialMean));
  }
  if (p == 0.0 || n == 0.0) {
    mode_ = 0;
    pmf_mode_ = 1.0;
    return;
  }
  if (p == 1.0) {
    mode_ = static_cast<std::uint64_t>(n);
    pmf_mode_ = 1.0;
    return;
  }
  odds_ = p / (1.0 - p);
  double mode = std::floor((n + 1.0) * p);
  if (mode > n) mode = n;
  mode_ = static_cast<std::uint64_t>(mode);
  pmf_mode_ = std::exp(binomial_log_pmf(n, p, mode_));
}

std::uint64_t BinomialDistribution::operator()(RngStream& rng) const {
  if (p_ == 0.0 || n_ == 0.0 || p_ == 1.0) return mode_;
  for (;;) {
    const double u = rng.uniform();
    double acc = pmf_mode_;
    if (u < acc) return mode_;
    std::uint64_t lo = mode_;
    std::uint64_t hi = mode_;
    double p_lo = pmf_mode_;
    double p_hi = pmf_mode_;
    auto below_of = [&](std::uint64_t k, double pk) {
      return k > 0 ? pk * static_cast<double>(k) / ((n_ - static_cast<double>(k) + 1.0) * odds_) : 0.0;
    };
    auto above_of = [&](std::uint64_t k, double pk) {
      return static_cast<double>(k) < n_ ? pk * (n_ - static_cast<double>(k)) / static_cast<double>(k + 1) * odds_
                                         : 0.0;
    };
    double next_lo = below_of(lo, p_lo);
    double next_hi = above_of(hi, p_hi);
    while (next_lo > 0.0 || next_hi > 0.0) {
      if (next_hi >= next_lo) {
        ++hi;
        p_hi = next_hi;
        acc += p_hi;
        if (u < acc) return hi;
        next_hi = above_of(hi, p_hi);
      } else {
        --lo;
        p_lo = next_lo;
        acc += p_lo;
        if (u < acc) return lo;
        next_lo = below_of(lo, p_lo);
      }
    }
  }
}

std::uint64_t sample_binomial(double n, double p, RngStream& rng) {
  return BinomialDistribution(n, p)(rng);
}

}  // namespace hypergiant
