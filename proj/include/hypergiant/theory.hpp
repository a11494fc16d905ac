#pragma once

#include <cstdint>

namespace hypergiant {

/// Parameters of the random d-uniform hypergraph G^d(N, p) with
/// p = lambda (d-2)! / N^(d-1).
struct ModelParams {
  int d = 3;
  double lambda = 1.5;
  std::int64_t N = 1000;
  double p = 0.0;
  double log_p = 0.0;

  /// Derives p from lambda. Throws std::invalid_argument on d < 2, N < d,
  /// lambda <= 0 or p > 1.
  static ModelParams make(int d, double lambda, std::int64_t N);
  /// Fixes p directly; lambda is back-computed for reporting.
  static ModelParams from_probability(int d, double p, std::int64_t N);

  double epsilon() const { return lambda - 1.0; }
};

double edge_probability(int d, double lambda, std::int64_t N);

/// Root in (0,1) of 1 - rho = exp(-lambda rho). Requires lambda > 1.
double solve_rho2(double lambda);

/// Root in (0,1) of 1 - rho = exp(-(lambda/(d-1)) (1 - (1-rho)^(d-1))),
/// cross-checked against 1 - (1 - solve_rho2(lambda))^(1/(d-1)).
double solve_rho_d(int d, double lambda);

/// lambda (1 - rho_d)^(d-1), the subcritical parameter dual to lambda.
double dual_lambda(int d, double lambda);

/// lambda (1-rho)^2 - lambda_* (1-rho) + rho (1-rho) with rho = rho_d.
double variance_constant(int d, double lambda);

double rate_I(double x, double c);
double rate_J(double y, int d, double lambda);

/// 1 - x - exp(-(lambda/(d-1)) (1 - (1-x)^(d-1))) on [0, 1].
double trajectory_g(double x, int d, double lambda);
double trajectory_f(std::int64_t t, const ModelParams& params);
/// N exp(-(lambda/(d-1)) (1 - (1 - i/N)^(d-1))); equals N - i - f(i).
double unseen_u(std::int64_t i, const ModelParams& params);

/// Leading-order conditional variance of the activations at time t given U
/// unseen vertices. The (d-2) term is identically zero for d = 2.
double asymptotic_conditional_variance(std::int64_t t, std::int64_t U, const ModelParams& params);

/// alpha_t = p C(N-t-1, d-2), the first-order activation rate of one unseen
/// vertex at step t (t >= 1).
double activation_rate(std::int64_t t, const ModelParams& params);

/// pi_t = 1 - (1-p)^C(N-t-2, d-2): exact probability that a given unseen
/// vertex is activated by the step taken when t vertices are explored.
double activation_probability(std::int64_t t, const ModelParams& params);

/// Discrete variance sum whose limit is variance_constant; needs N >= 1000.
double numeric_c(const ModelParams& params);

/// Derived constants for one (d, lambda).
struct TheoryConstants {
  int d = 0;
  double lambda = 0.0;
  double rho2 = 0.0;
  double rho_d = 0.0;
  double lambda_star = 0.0;
  double c = 0.0;
  double sigma2 = 0.0;

  static TheoryConstants compute(int d, double lambda);

  double rate_I(double x) const;
  /// Same code path as rate_I(y (1 - lambda_star)).
  double rate_J(double y) const;
};

struct RegimeReport {
  double epsilon = 0.0;
  double tau = 0.0;
  double strength = 0.0;  // epsilon^3 N^tau
  bool reliable = true;
};

/// Regime strength below which asymptotic comparisons are flagged.
inline constexpr double kRegimeThreshold = 10.0;

RegimeReport validate_regime(const ModelParams& params, double alpha, double iota);

}  // namespace hypergiant
