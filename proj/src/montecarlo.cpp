#include "hypergiant/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hypergiant/components.hpp"
#include "hypergiant/csv.hpp"
#include "hypergiant/exploration.hpp"
#include "hypergiant/hypergraph.hpp"
#include "hypergiant/report.hpp"
#include "hypergiant/rng.hpp"

namespace hypergiant {

const char* to_string(Mode mode) { return mode == Mode::exact ? "exact" : "proxy"; }

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::clt: return "clt";
    case ExperimentKind::tail: return "tail";
    case ExperimentKind::martingale: return "martingale";
    case ExperimentKind::coupling: return "coupling";
  }
  return "unknown";
}

void ExperimentSpec::validate() const {
  if (!(alpha > 0.5 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (1/2, 1)");
  if (!(gamma_exp > 2.0 * alpha - 1.0)) throw std::invalid_argument("gamma must exceed 2*alpha - 1");
  if (!(gamma_exp < xi_exp)) throw std::invalid_argument("gamma must be below xi");
  if (!(xi_exp < alpha)) throw std::invalid_argument("xi must be below alpha");
  if (!(lambda > 1.0)) throw std::invalid_argument("lambda must exceed 1");
  if (reps < 0) throw std::invalid_argument("reps must be non-negative");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  for (double y : y_grid) {
    if (!(y >= 0.0) || !std::isfinite(y)) throw std::invalid_argument("y values must be finite and non-negative");
  }
  for (double z : zeta) {
    if (!std::isfinite(z)) throw std::invalid_argument("zeta values must be finite");
  }
  (void)params();
}

ModelParams ExperimentSpec::params() const { return ModelParams::make(d, lambda, N); }

std::int64_t ExperimentSpec::seed_count() const {
  const auto k = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(N), gamma_exp)));
  return std::clamp<std::int64_t>(k, 1, N);
}

double ExperimentSpec::slack() const { return std::pow(static_cast<double>(N), xi_exp); }

double ExperimentSpec::speed() const { return std::pow(static_cast<double>(N), 2.0 * alpha - 1.0); }

std::int64_t giant_centre(double rho_d, std::int64_t N) {
  return static_cast<std::int64_t>(std::floor(rho_d * static_cast<double>(N)));
}

std::int64_t martingale_horizon(double rho_d, std::int64_t N, double zeta, double alpha) {
  const double n = static_cast<double>(N);
  const double t = std::floor(rho_d * n + zeta * std::pow(n, alpha));
  return std::clamp<std::int64_t>(static_cast<std::int64_t>(t), 0, N);
}

double y_for_observability(const TheoryConstants& theory, std::int64_t N, double alpha, double target) {
  const double speed = std::pow(static_cast<double>(N), 2.0 * alpha - 1.0);
  return std::sqrt(target / (speed * theory.rate_J(1.0)));
}

std::vector<std::int64_t> run_giant_samples(const ExperimentSpec& spec) {
  spec.validate();
  const auto reps = static_cast<std::size_t>(spec.reps);
  std::vector<std::int64_t> out(reps, 0);
  if (reps == 0) return out;
  const ModelParams params = spec.params();
  if (spec.mode == Mode::exact) {
    parallel_for(reps, spec.threads, [&](std::size_t r) {
      RngStream rng(spec.master_seed, r);
      const Hypergraph h = sample_hypergraph(params, rng);
      out[r] = connected_components(h).l1;
    });
    return out;
  }
  const StepTables tables(params);
  ExplorationConfig cfg;
  cfg.k = spec.seed_count();
  cfg.stop = StopRule::hit_zero;
  parallel_for(reps, spec.threads, [&](std::size_t r) {
    RngStream rng(spec.master_seed, r);
    const ExplorationTrace trace = explore_stream(tables, cfg, rng);
    out[r] = *trace.hit_zero_time;
  });
  return out;
}

CltRecord clt_from_samples(const ExperimentSpec& spec, std::span<const std::int64_t> samples) {
  const TheoryConstants theory = TheoryConstants::compute(spec.d, spec.lambda);
  const double n = static_cast<double>(spec.N);
  const double centre = theory.rho_d * n;
  const double root = std::sqrt(n);
  std::vector<double> scaled;
  scaled.reserve(samples.size());
  for (auto s : samples) scaled.push_back((static_cast<double>(s) - centre) / root);
  const SampleSummary summary = summarize(scaled);
  CltRecord rec;
  rec.N = spec.N;
  rec.d = spec.d;
  rec.lambda = spec.lambda;
  rec.reps = static_cast<std::int64_t>(samples.size());
  rec.mean_scaled = summary.mean;
  rec.mean_se = summary.standard_error;
  rec.var_scaled = summary.variance;
  rec.sigma2_theory = theory.sigma2;
  return rec;
}

CltRecord estimate_clt(const ExperimentSpec& spec) {
  if (spec.reps < 100) throw std::invalid_argument("clt needs reps >= 100");
  const auto samples = run_giant_samples(spec);
  return clt_from_samples(spec, samples);
}

std::vector<TailRecord> tail_from_samples(const ExperimentSpec& spec, std::span<const std::int64_t> samples,
                                          std::vector<std::string>* warnings) {
  const TheoryConstants theory = TheoryConstants::compute(spec.d, spec.lambda);
  const double speed = spec.speed();
  std::vector<double> ys = spec.y_grid;
  if (ys.empty()) {
    for (double target : kDefaultTargets) ys.push_back(y_for_observability(theory, spec.N, spec.alpha, target));
  }
  const double centre = static_cast<double>(giant_centre(theory.rho_d, spec.N));
  const double scale = std::pow(static_cast<double>(spec.N), spec.alpha);
  const auto reps = static_cast<std::int64_t>(samples.size());
  if (reps == 0) throw std::invalid_argument("tail needs at least one sample");

  std::vector<TailRecord> out;
  for (double y : ys) {
    TailRecord rec;
    rec.N = spec.N;
    rec.d = spec.d;
    rec.lambda = spec.lambda;
    rec.alpha = spec.alpha;
    rec.y = y;
    rec.threshold = y * scale;
    rec.reps = reps;
    for (auto s : samples) {
      const double dev = static_cast<double>(s) - centre;
      if (dev > rec.threshold) ++rec.hits_up;
      if (-dev > rec.threshold) ++rec.hits_down;
    }
    const std::int64_t hits = rec.hits_up + rec.hits_down;
    const double nn = static_cast<double>(reps);
    rec.p_hat = static_cast<double>(hits) / nn;
    rec.p_up = static_cast<double>(rec.hits_up) / nn;
    rec.p_down = static_cast<double>(rec.hits_down) / nn;
    rec.ci = wilson_interval(hits, reps);
    rec.J_y = theory.rate_J(y);
    rec.observability = rec.J_y * speed;
    constexpr double inf = std::numeric_limits<double>::infinity();
    auto to_rate = [&](double p) { return p > 0.0 ? -std::log(p) / speed : inf; };
    if (hits == 0) {
      rec.ci.hi = std::min(1.0, 3.0 / nn);
      rec.rate_hat = std::numeric_limits<double>::quiet_NaN();
      rec.rate_ci = {to_rate(rec.ci.hi), inf};
      rec.rate_lower_bound_only = true;
    } else {
      rec.rate_hat = to_rate(rec.p_hat);
      rec.rate_ci = {to_rate(rec.ci.hi), to_rate(rec.ci.lo)};
    }
    constexpr double slop = 1e-9;
    if (warnings != nullptr &&
        (rec.observability < kObservabilityLow * (1 - slop) || rec.observability > kObservabilityHigh * (1 + slop))) {
      warnings->push_back("y = " + format_double(y) + " gives J(y) N^(2 alpha - 1) = " +
                          format_double(rec.observability) + ", outside the observability window [1, 8]");
    }
    out.push_back(rec);
  }
  return out;
}

std::vector<TailRecord> estimate_tail(const ExperimentSpec& spec, std::vector<std::string>* warnings) {
  if (spec.reps < 1000) throw std::invalid_argument("tail needs reps >= 1000");
  const auto samples = run_giant_samples(spec);
  return tail_from_samples(spec, samples, warnings);
}

std::vector<MartingaleRecord> martingale_mdp_check(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.reps < 1000) throw std::invalid_argument("martingale needs reps >= 1000");
  if (spec.zeta.empty()) throw std::invalid_argument("martingale needs at least one zeta");
  const TheoryConstants theory = TheoryConstants::compute(spec.d, spec.lambda);
  const ModelParams params = spec.params();
  const StepTables tables(params);

  ExplorationConfig cfg;
  cfg.k = spec.seed_count();
  cfg.stop = StopRule::run_to_horizon;
  for (double z : spec.zeta) cfg.checkpoints.push_back(martingale_horizon(theory.rho_d, spec.N, z, spec.alpha));
  cfg.horizon = *std::max_element(cfg.checkpoints.begin(), cfg.checkpoints.end());

  const auto reps = static_cast<std::size_t>(spec.reps);
  const std::size_t nz = spec.zeta.size();
  std::vector<double> values(reps * nz, 0.0);  // [replica][zeta]
  std::vector<double> size_rhs(reps * nz, 0.0);
  parallel_for(reps, spec.threads, [&](std::size_t r) {
    RngStream rng(spec.master_seed, r);
    const ExplorationTrace trace = explore_stream(tables, cfg, rng);
    for (std::size_t j = 0; j < nz; ++j) {
      for (const auto& cp : trace.checkpoints) {
        if (cp.t == cfg.checkpoints[j]) {
          values[r * nz + j] = cp.beta * cp.S;
          size_rhs[r * nz + j] = static_cast<double>(cp.t) + cp.A_tilde / (1.0 - theory.lambda_star);
          break;
        }
      }
    }
  });

  std::vector<MartingaleRecord> out;
  std::vector<double> column(reps);
  for (std::size_t j = 0; j < nz; ++j) {
    for (std::size_t r = 0; r < reps; ++r) column[r] = values[r * nz + j];
    const SampleSummary s = summarize(column);
    MartingaleRecord rec;
    rec.zeta = spec.zeta[j];
    rec.horizon = cfg.checkpoints[j];
    rec.reps = spec.reps;
    rec.mean = s.mean;
    rec.mean_se = s.standard_error;
    rec.var_over_N = s.variance / static_cast<double>(spec.N);
    rec.c_theory = theory.c;
    for (std::size_t r = 0; r < reps; ++r) column[r] = size_rhs[r * nz + j];
    const SampleSummary sz = summarize(column);
    rec.size_rhs_mean = sz.mean;
    rec.size_rhs_se = sz.standard_error;
    out.push_back(rec);
  }
  const auto zero = std::find(spec.zeta.begin(), spec.zeta.end(), 0.0);
  if (zero != spec.zeta.end()) {
    const double base = out[static_cast<std::size_t>(zero - spec.zeta.begin())].var_over_N;
    for (auto& rec : out) rec.relative_change_vs_zero = (rec.var_over_N - base) / base;
  }
  return out;
}

CouplingRecord coupling_check(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.mode != Mode::exact) throw std::invalid_argument("coupling needs mode exact");
  const ModelParams params = spec.params();
  const std::int64_t k = spec.seed_count();
  const double slack = spec.slack();
  const auto reps = static_cast<std::size_t>(spec.reps);
  std::vector<GiantAndSeeds> results(reps);
  parallel_for(reps, spec.threads, [&](std::size_t r) {
    RngStream rng(spec.master_seed, r);
    const Hypergraph h = sample_hypergraph(params, rng);
    results[r] = giant_and_seed_union(h, k);
  });

  CouplingRecord rec;
  rec.N = spec.N;
  rec.reps = spec.reps;
  rec.seed_count = k;
  rec.slack = slack;
  std::vector<std::int64_t> gaps;
  gaps.reserve(reps);
  for (const auto& g : results) {
    if (g.l1 > g.seed_union) ++rec.giant_exceeds;
    if (static_cast<double>(g.l1) + slack < static_cast<double>(g.seed_union)) ++rec.seeds_exceed;
    gaps.push_back(g.seed_union - g.l1);
  }
  if (reps > 0) {
    rec.freq_giant_exceeds = static_cast<double>(rec.giant_exceeds) / static_cast<double>(reps);
    rec.freq_seeds_exceed = static_cast<double>(rec.seeds_exceed) / static_cast<double>(reps);
    const SampleSummary s = summarize(gaps);
    rec.mean_gap = s.mean;
    rec.sd_gap = std::sqrt(s.variance);
  }
  return rec;
}

ExperimentReport run_experiment(ExperimentKind kind, const ExperimentSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.kind = kind;
  report.spec = spec;
  report.theory = TheoryConstants::compute(spec.d, spec.lambda);
  const RegimeReport regime = validate_regime(spec.params(), spec.alpha, 0.05);
  if (!regime.reliable) {
    report.warnings.push_back("epsilon^3 N^tau = " + format_double(regime.strength) +
                              " is below 10; asymptotics unreliable");
  }
  switch (kind) {
    case ExperimentKind::clt: report.clt = estimate_clt(spec); break;
    case ExperimentKind::tail: report.tail = estimate_tail(spec, &report.warnings); break;
    case ExperimentKind::martingale: report.martingale = martingale_mdp_check(spec); break;
    case ExperimentKind::coupling: report.coupling = coupling_check(spec); break;
  }
  report.provenance.seed = spec.master_seed;
  report.provenance.spec_hash = spec_hash(kind, spec);
  report.provenance.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hypergiant
