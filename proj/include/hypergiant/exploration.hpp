#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hypergiant/binomial.hpp"
#include "hypergiant/hypergraph.hpp"
#include "hypergiant/rng.hpp"
#include "hypergiant/theory.hpp"

namespace hypergiant {

enum class Backend { graph, stream };
enum class StopRule { hit_zero, run_to_horizon };
enum class Selection { min_index, fifo };
enum class Recording { summary, full_trace };

struct ExplorationConfig {
  std::int64_t k = 1;  // vertices 1..k start active
  Backend backend = Backend::stream;
  StopRule stop = StopRule::hit_zero;
  std::int64_t horizon = 0;  // used by run_to_horizon
  Selection selection = Selection::min_index;
  Recording record = Recording::summary;
  /// Times at which (A, beta, S, x, A_tilde) are captured; needs step tables.
  std::vector<std::int64_t> checkpoints;

  void validate(std::int64_t N) const;
};

/// Deterministic per-step quantities of G^d(N, p), shared by every run with
/// the same parameters:
///   pi(t)       = 1 - (1-p)^C(N-t-2, d-2)   exact activation probability
///   alpha(t)    = p C(N-t-1, d-2)           first-order rate, t >= 1
///   beta(t)     = prod_{i<=t} (1 - alpha(i)), accumulated in log space
///   x(t)        x(0) = 0, x(t) = (1-alpha(t)) x(t-1) + alpha(t)(N-t+1) - 1
///   revealed(t) = Binomial(C(N-t-1, d-1), p), edges found by the step taken
///                 when t vertices are explored
class StepTables {
 public:
  explicit StepTables(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  double pi(std::int64_t t) const { return pi_[static_cast<std::size_t>(t)]; }
  double alpha(std::int64_t t) const { return alpha_[static_cast<std::size_t>(t)]; }
  double beta(std::int64_t t) const { return beta_[static_cast<std::size_t>(t)]; }
  double log_beta(std::int64_t t) const { return log_beta_[static_cast<std::size_t>(t)]; }
  double x(std::int64_t t) const { return x_[static_cast<std::size_t>(t)]; }
  const BinomialDistribution& revealed(std::int64_t t) const { return revealed_[static_cast<std::size_t>(t)]; }

 private:
  ModelParams params_;
  std::vector<double> pi_, alpha_, beta_, log_beta_, x_;
  std::vector<BinomialDistribution> revealed_;
};

struct Checkpoint {
  std::int64_t t = 0;
  std::int64_t A = 0;
  double beta = 0.0;
  double S = 0.0;
  double x = 0.0;
  double A_tilde = 0.0;
};

/// Result of one exploration run. Summary fields are always filled; the
/// per-step arrays (index t = 0..steps) only under Recording::full_trace,
/// and the decomposition arrays only once step tables were supplied or
/// decompose() was applied.
///
/// A is the number of active vertices and U = N - t - A the number of unseen
/// ones. While some vertex is active, A_t = A_{t-1} + eta_t - 1. A step taken
/// with no active vertex restarts at the lowest-index unseen vertex
/// (restart[t] = 1); that vertex leaves the unseen set directly, so there
/// A_t = eta_t.
struct ExplorationTrace {
  std::int64_t N = 0;
  int d = 0;
  std::int64_t k = 0;
  std::int64_t steps = 0;
  std::optional<std::int64_t> hit_zero_time;
  std::int64_t max_A = 0;
  std::int64_t argmax_A = 0;
  std::optional<double> final_S;
  std::vector<Checkpoint> checkpoints;

  std::vector<std::int64_t> A, U, eta, comp_count, X;
  std::vector<std::uint8_t> restart;
  std::vector<double> D, Delta, alpha, beta, S, x, A_tilde, eps;

  bool has_full_trace() const { return !A.empty(); }
  bool is_decomposed() const { return !S.empty(); }
};

/// Walks a realized hypergraph through its incidence lists. Deterministic.
/// With tables, the summary also carries final_S and checkpoints.
ExplorationTrace explore_graph(const Hypergraph& h, const ExplorationConfig& cfg,
                               const StepTables* tables = nullptr);

/// Samples the revealed edges step by step without materializing the graph.
/// Each step draws m ~ revealed(t) edges through the explored vertex and
/// m distinct uniform (d-1)-subsets of the other non-explored vertices.
/// Candidate pools of different steps are disjoint: an edge examined at step
/// s contains the vertex explored at s, so no later step (which excludes
/// explored vertices) can draw it again. Dedup is therefore per step only.
ExplorationTrace explore_stream(const StepTables& tables, const ExplorationConfig& cfg, RngStream& rng);
ExplorationTrace explore_stream(const ModelParams& params, const ExplorationConfig& cfg, RngStream& rng);

/// Fills D, Delta, alpha, beta, S, x, A_tilde and eps on a full trace:
///   D_t     = c_{t-1} pi(t-1) - 1,  c = U_{t-1} - restart_t unseen candidates
///   Delta_t = eta_t - c_{t-1} pi(t-1)
///   S_t     = S_{t-1} + Delta_t / beta_t,  A_tilde_t = x_t + beta_t S_t
///   eps_t   = (A_t - x_t) - (1 - alpha_t)(A_{t-1} - x_{t-1}) - Delta_t
/// Throws std::invalid_argument when the trace has no per-step arrays.
ExplorationTrace decompose(ExplorationTrace trace, const ModelParams& params);
ExplorationTrace decompose(ExplorationTrace trace, const StepTables& tables);

/// Columns t,A,U,eta,D,Delta,alpha,beta,S,x,A_tilde,C_count,X.
void write_trace_csv(std::ostream& out, const ExplorationTrace& trace);

}  // namespace hypergiant
