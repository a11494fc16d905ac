#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypergiant/stats.hpp"
#include "hypergiant/theory.hpp"

namespace hypergiant {

/// exact: sample the hypergraph and take the largest component.
/// proxy: streaming exploration from ceil(N^gamma) seeds, giant size
/// approximated by the union of their components.
enum class Mode { exact, proxy };
enum class ExperimentKind { clt, tail, martingale, coupling };

const char* to_string(Mode mode);
const char* to_string(ExperimentKind kind);

struct ExperimentSpec {
  int d = 3;
  double lambda = 1.5;
  std::int64_t N = 10000;
  std::int64_t reps = 1000;
  double alpha = 0.6;               // deviation exponent
  std::vector<double> y_grid;       // empty: chosen from observability targets
  std::vector<double> zeta{0.0};    // time shifts of the martingale horizon
  double gamma_exp = 0.35;          // seed count N^gamma
  double xi_exp = 0.45;             // slack N^xi
  Mode mode = Mode::exact;
  std::uint64_t master_seed = 1;
  int threads = 1;

  /// Throws std::invalid_argument naming the violated condition, e.g.
  /// "alpha must lie in (1/2, 1)" or "gamma must be below xi".
  void validate() const;

  ModelParams params() const;
  std::int64_t seed_count() const;  // ceil(N^gamma), capped at N
  double slack() const;             // N^xi
  double speed() const;             // N^(2 alpha - 1)
};

/// floor(rho_d N), the centre of every deviation threshold.
std::int64_t giant_centre(double rho_d, std::int64_t N);

/// floor(rho_d N + zeta N^alpha), clamped to [0, N].
std::int64_t martingale_horizon(double rho_d, std::int64_t N, double zeta, double alpha);

/// y with J(y) N^(2 alpha - 1) = target.
double y_for_observability(const TheoryConstants& theory, std::int64_t N, double alpha, double target);

inline constexpr double kObservabilityLow = 1.0;
inline constexpr double kObservabilityHigh = 8.0;
/// Targets used when no y grid is given; 3 is the reference level.
inline constexpr double kDefaultTargets[] = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};

struct CltRecord {
  std::int64_t N = 0;
  int d = 0;
  double lambda = 0.0;
  std::int64_t reps = 0;
  double mean_scaled = 0.0;
  double mean_se = 0.0;
  double var_scaled = 0.0;
  double sigma2_theory = 0.0;
};

struct TailRecord {
  std::int64_t N = 0;
  int d = 0;
  double lambda = 0.0;
  double alpha = 0.0;
  double y = 0.0;
  double threshold = 0.0;  // y N^alpha
  std::int64_t reps = 0;
  std::int64_t hits_up = 0;    // sample - centre > threshold
  std::int64_t hits_down = 0;  // centre - sample > threshold
  double p_hat = 0.0;          // two-sided
  Interval ci;
  double p_up = 0.0;
  double p_down = 0.0;
  /// -log(p_hat) / N^(2 alpha - 1); NaN with no hits, when only the lower
  /// end of rate_ci (from the rule-of-three bound 3/reps) is meaningful.
  double rate_hat = 0.0;
  Interval rate_ci;
  bool rate_lower_bound_only = false;
  double J_y = 0.0;
  double observability = 0.0;  // J(y) N^(2 alpha - 1)
};

struct MartingaleRecord {
  double zeta = 0.0;
  std::int64_t horizon = 0;
  std::int64_t reps = 0;
  double mean = 0.0;  // of beta S at the horizon
  double mean_se = 0.0;
  double var_over_N = 0.0;
  double c_theory = 0.0;
  double relative_change_vs_zero = 0.0;  // paired against zeta = 0 when present
  // horizon + A~/(1 - lambda*), averaged. At zeta = 0 this is the size
  // estimate of the component being explored at floor(rho_d N).
  double size_rhs_mean = 0.0;
  double size_rhs_se = 0.0;
};

struct CouplingRecord {
  std::int64_t N = 0;
  std::int64_t reps = 0;
  std::int64_t seed_count = 0;
  double slack = 0.0;
  std::int64_t giant_exceeds = 0;    // |C_max| > |C_<=k|
  std::int64_t seeds_exceed = 0;     // |C_max| + slack < |C_<=k|
  double freq_giant_exceeds = 0.0;
  double freq_seeds_exceed = 0.0;
  double mean_gap = 0.0;             // mean of |C_<=k| - |C_max|
  double sd_gap = 0.0;
};

struct Provenance {
  std::uint64_t seed = 0;
  std::uint64_t spec_hash = 0;
  double wall_time_s = 0.0;
};

struct ExperimentReport {
  ExperimentKind kind = ExperimentKind::clt;
  ExperimentSpec spec;
  TheoryConstants theory;
  std::optional<CltRecord> clt;
  std::vector<TailRecord> tail;
  std::vector<MartingaleRecord> martingale;
  std::optional<CouplingRecord> coupling;
  std::vector<std::string> warnings;
  Provenance provenance;
};

/// One giant-size sample per replica (index order); replica r draws from
/// RngStream(master_seed, r). Empty for reps = 0.
std::vector<std::int64_t> run_giant_samples(const ExperimentSpec& spec);

CltRecord clt_from_samples(const ExperimentSpec& spec, std::span<const std::int64_t> samples);
/// Requires reps >= 100.
CltRecord estimate_clt(const ExperimentSpec& spec);

std::vector<TailRecord> tail_from_samples(const ExperimentSpec& spec, std::span<const std::int64_t> samples,
                                          std::vector<std::string>* warnings = nullptr);
/// Requires reps >= 1000. Warnings go to *warnings for y outside the
/// observability window.
std::vector<TailRecord> estimate_tail(const ExperimentSpec& spec, std::vector<std::string>* warnings = nullptr);

/// Runs the streaming exploration once per replica to the largest horizon,
/// reading beta S at every zeta's horizon, so all zeta share their random
/// numbers. Requires reps >= 1000.
std::vector<MartingaleRecord> martingale_mdp_check(const ExperimentSpec& spec);

/// Exact mode only: |C_max| and |C_<=k| on the same sampled hypergraph.
CouplingRecord coupling_check(const ExperimentSpec& spec);

/// Validates, runs, and fills theory and provenance.
ExperimentReport run_experiment(ExperimentKind kind, const ExperimentSpec& spec);

}  // namespace hypergiant
