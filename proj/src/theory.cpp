#include "hypergiant/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypergiant/combinatorics.hpp"

namespace hypergiant {

namespace {

constexpr int kExactFactorialMaxD = 20;
constexpr double kBisectionRelWidth = 1e-6;
constexpr double kCrossCheckTol = 1e-10;

void require_supercritical(double lambda) {
  if (!(lambda > 1.0)) {
    throw std::invalid_argument("lambda must be > 1 (got " + std::to_string(lambda) +
                                "); the survival root is 0 at or below criticality");
  }
}

void require_dimension(int d) {
  if (d < 2) throw std::invalid_argument("d must be >= 2 (got " + std::to_string(d) + ")");
}

// Root of a function that is positive just right of 0 and negative at 1.
// Bisection narrows the bracket, safeguarded Newton polishes.
double positive_root(const std::function<double(double)>& h,
                     const std::function<double(double)>& dh) {
  double lo = 0.5;
  while (h(lo) <= 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) throw std::runtime_error("positive_root: no sign change near 0");
  }
  double hi = 1.0;
  while (hi - lo > kBisectionRelWidth * hi) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = h(x);
    if (fx == 0.0) return x;
    (fx > 0.0 ? lo : hi) = x;
    const double slope = dh(x);
    double next = x - fx / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 2e-16 * x) return next;
    x = next;
  }
  return x;
}

double fixed_point_residual_d(double x, int d, double lambda) {
  // 1 - x - exp(-(lambda/(d-1)) (1 - (1-x)^(d-1))), written to keep
  // relative accuracy for x near 0.
  const double m = static_cast<double>(d - 1);
  const double inner = -std::expm1(m * std::log1p(-x));
  return -x - std::expm1(-(lambda / m) * inner);
}

}  // namespace

ModelParams ModelParams::make(int d, double lambda, std::int64_t N) {
  ModelParams params;
  params.d = d;
  params.lambda = lambda;
  params.N = N;
  params.p = edge_probability(d, lambda, N);
  params.log_p = d > kExactFactorialMaxD
                     ? std::log(lambda) + std::lgamma(d - 1.0) - (d - 1.0) * std::log(static_cast<double>(N))
                     : std::log(params.p);
  return params;
}

ModelParams ModelParams::from_probability(int d, double p, std::int64_t N) {
  require_dimension(d);
  if (N < d) throw std::invalid_argument("N must be >= d");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  ModelParams params;
  params.d = d;
  params.N = N;
  params.p = p;
  params.log_p = std::log(p);
  params.lambda = std::exp(std::log(p) + (d - 1.0) * std::log(static_cast<double>(N)) - std::lgamma(d - 1.0));
  if (p == 0.0) params.lambda = 0.0;
  return params;
}

double edge_probability(int d, double lambda, std::int64_t N) {
  require_dimension(d);
  if (N < d) throw std::invalid_argument("N must be >= d (got N=" + std::to_string(N) + ")");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  double p = 0.0;
  if (d <= kExactFactorialMaxD) {
    std::uint64_t factorial = 1;
    for (int i = 2; i <= d - 2; ++i) factorial *= static_cast<std::uint64_t>(i);
    double power = 1.0;
    for (int i = 0; i < d - 1; ++i) power *= static_cast<double>(N);
    p = lambda * static_cast<double>(factorial) / power;
  } else {
    p = std::exp(std::log(lambda) + std::lgamma(d - 1.0) - (d - 1.0) * std::log(static_cast<double>(N)));
  }
  if (p > 1.0) {
    throw std::invalid_argument("edge probability p = " + std::to_string(p) +
                                " exceeds 1 for this (d, lambda, N)");
  }
  return p;
}

double solve_rho2(double lambda) {
  require_supercritical(lambda);
  return positive_root([lambda](double r) { return -r - std::expm1(-lambda * r); },
                       [lambda](double r) { return -1.0 + lambda * std::exp(-lambda * r); });
}

double solve_rho_d(int d, double lambda) {
  require_dimension(d);
  require_supercritical(lambda);
  const double m = static_cast<double>(d - 1);
  const double root = positive_root(
      [=](double x) { return fixed_point_residual_d(x, d, lambda); },
      [=](double x) {
        const double e = std::exp(-(lambda / m) * (1.0 - std::pow(1.0 - x, m)));
        return -1.0 + lambda * std::pow(1.0 - x, m - 1.0) * e;
      });
  const double rho2 = solve_rho2(lambda);
  const double via_rho2 = -std::expm1(std::log1p(-rho2) / m);
  if (std::abs(root - via_rho2) > kCrossCheckTol) {
    throw std::runtime_error("solve_rho_d: fixed point and (1-rho2)^(1/(d-1)) disagree");
  }
  return root;
}

double dual_lambda(int d, double lambda) {
  const double rho = solve_rho_d(d, lambda);
  return lambda * std::pow(1.0 - rho, d - 1);
}

double variance_constant(int d, double lambda) {
  return TheoryConstants::compute(d, lambda).c;
}

double rate_I(double x, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("rate_I: c must be > 0");
  return x * x / (2.0 * c);
}

double rate_J(double y, int d, double lambda) {
  return TheoryConstants::compute(d, lambda).rate_J(y);
}

double trajectory_g(double x, int d, double lambda) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("trajectory_g: x must lie in [0, 1]");
  require_dimension(d);
  return fixed_point_residual_d(x, d, lambda);
}

double trajectory_f(std::int64_t t, const ModelParams& params) {
  if (t < 0 || t > params.N) throw std::invalid_argument("trajectory_f: t must lie in [0, N]");
  const double n = static_cast<double>(params.N);
  return n * trajectory_g(static_cast<double>(t) / n, params.d, params.lambda);
}

double unseen_u(std::int64_t i, const ModelParams& params) {
  if (i < 0 || i > params.N) throw std::invalid_argument("unseen_u: i must lie in [0, N]");
  const double n = static_cast<double>(params.N);
  const double m = static_cast<double>(params.d - 1);
  const double inner = -std::expm1(m * std::log1p(-static_cast<double>(i) / n));
  return n * std::exp(-(params.lambda / m) * inner);
}

double asymptotic_conditional_variance(std::int64_t t, std::int64_t U, const ModelParams& params) {
  if (t < 0 || t >= params.N) throw std::invalid_argument("asymptotic_conditional_variance: t must lie in [0, N)");
  if (U < 0 || U > params.N - t) throw std::invalid_argument("asymptotic_conditional_variance: U must lie in [0, N-t]");
  const double n = static_cast<double>(params.N);
  const double rest = 1.0 - static_cast<double>(t) / n;
  const double un = static_cast<double>(U) / n;
  const int d = params.d;
  double pair_term = 0.0;
  if (d > 2) pair_term = params.lambda * (d - 2) * std::pow(rest, d - 3) * un * un;
  return pair_term + params.lambda * std::pow(rest, d - 2) * un;
}

double activation_rate(std::int64_t t, const ModelParams& params) {
  const double n = static_cast<double>(params.N - t - 1);
  const std::int64_t k = params.d - 2;
  if (k < 0 || n < static_cast<double>(k)) return 0.0;
  if (params.d > kExactFactorialMaxD) return std::exp(params.log_p + log_choose(n, k));
  return params.p * choose_real(n, k);
}

double activation_probability(std::int64_t t, const ModelParams& params) {
  const double nu = choose_real(static_cast<double>(params.N - t - 2), params.d - 2);
  if (nu == 0.0 || params.p == 0.0) return 0.0;
  if (params.p == 1.0) return 1.0;
  return -std::expm1(nu * std::log1p(-params.p));
}

double numeric_c(const ModelParams& params) {
  require_supercritical(params.lambda);
  if (params.N < 1000) throw std::invalid_argument("numeric_c: N must be >= 1000");
  const TheoryConstants theory = TheoryConstants::compute(params.d, params.lambda);
  const double n = static_cast<double>(params.N);
  const auto horizon = static_cast<std::int64_t>(std::floor(theory.rho_d * n));

  // log beta_t = sum_{j <= t} log(1 - alpha_j); ratios as differences.
  std::vector<double> log_beta(static_cast<std::size_t>(horizon) + 1, 0.0);
  for (std::int64_t j = 1; j <= horizon; ++j) {
    log_beta[j] = log_beta[j - 1] + std::log1p(-activation_rate(j, params));
  }
  const int d = params.d;
  double sum = 0.0;
  for (std::int64_t i = 0; i < horizon; ++i) {
    const double rest = 1.0 - static_cast<double>(i) / n;
    const double un = unseen_u(i, params) / n;
    double bracket = params.lambda * std::pow(rest, d - 2) * un;
    if (d > 2) bracket += params.lambda * (d - 2) * std::pow(rest, d - 3) * un * un;
    sum += std::exp(2.0 * (log_beta[horizon] - log_beta[i + 1])) * bracket;
  }
  return sum / n;
}

TheoryConstants TheoryConstants::compute(int d, double lambda) {
  TheoryConstants out;
  out.d = d;
  out.lambda = lambda;
  out.rho2 = solve_rho2(lambda);
  out.rho_d = solve_rho_d(d, lambda);
  const double q = 1.0 - out.rho_d;
  out.lambda_star = lambda * std::pow(q, d - 1);
  out.c = lambda * q * q - out.lambda_star * q + out.rho_d * q;
  if (!(out.c > 0.0)) throw std::runtime_error("variance constant is not positive");
  out.sigma2 = out.c / ((1.0 - out.lambda_star) * (1.0 - out.lambda_star));
  return out;
}

double TheoryConstants::rate_I(double x) const { return hypergiant::rate_I(x, c); }

double TheoryConstants::rate_J(double y) const { return rate_I(y * (1.0 - lambda_star)); }

RegimeReport validate_regime(const ModelParams& params, double alpha, double iota) {
  if (!(alpha > 0.5 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (1/2, 1)");
  if (!(iota > 0.0)) throw std::invalid_argument("iota must be > 0");
  RegimeReport report;
  report.epsilon = params.epsilon();
  report.tau = std::min(0.5, 2.0 - 2.0 * alpha - iota);
  report.strength = std::pow(report.epsilon, 3) * std::pow(static_cast<double>(params.N), report.tau);
  report.reliable = report.strength >= kRegimeThreshold;
  return report;
}

}  // namespace hypergiant
