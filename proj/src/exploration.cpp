#include "hypergiant/exploration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "hypergiant/combinatorics.hpp"
#include "hypergiant/csv.hpp"
#include "hypergiant/subset.hpp"

namespace hypergiant {

void ExplorationConfig::validate(std::int64_t N) const {
  if (k < 1 || k > N) throw std::invalid_argument("exploration: k must lie in [1, N] (got " + std::to_string(k) + ")");
  if (stop == StopRule::run_to_horizon && (horizon < 0 || horizon > N)) {
    throw std::invalid_argument("exploration: horizon must lie in [0, N]");
  }
  for (auto t : checkpoints) {
    if (t < 0 || t > N) throw std::invalid_argument("exploration: checkpoint outside [0, N]");
  }
}

StepTables::StepTables(const ModelParams& params) : params_(params) {
  const std::int64_t n = params.N;
  const auto size = static_cast<std::size_t>(n) + 1;
  pi_.resize(size);
  alpha_.assign(size, 0.0);
  beta_.assign(size, 1.0);
  log_beta_.assign(size, 0.0);
  x_.assign(size, 0.0);
  revealed_.resize(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t <= n; ++t) {
    pi_[t] = activation_probability(t, params);
    if (t >= 1) {
      alpha_[t] = activation_rate(t, params);
      log_beta_[t] = log_beta_[t - 1] + std::log1p(-alpha_[t]);
      beta_[t] = std::exp(log_beta_[t]);
      x_[t] = (1.0 - alpha_[t]) * x_[t - 1] + alpha_[t] * static_cast<double>(n - t + 1) - 1.0;
    }
    if (t < n) {
      revealed_[t] = BinomialDistribution(choose_real(static_cast<double>(n - t - 1), params.d - 1), params.p);
    }
  }
}

namespace {

enum : std::uint8_t { kUnseen = 0, kActive = 1, kExplored = 2 };

// Hierarchical 64-ary bitset over vertex ids: insert, erase and find-min in
// O(log_64 N) word operations.
class MinBitset {
 public:
  explicit MinBitset(std::size_t universe) {
    std::size_t words = universe / 64 + 1;
    for (;;) {
      levels_.emplace_back(words, 0);
      if (words == 1) break;
      words = (words + 63) / 64;
    }
  }

  bool empty() const { return levels_.back()[0] == 0; }

  void insert(std::size_t x) {
    for (auto& level : levels_) {
      const std::uint64_t bit = std::uint64_t{1} << (x & 63);
      x >>= 6;
      const bool was_empty = level[x] == 0;
      level[x] |= bit;
      if (!was_empty) return;
    }
  }

  std::size_t pop_min() {
    std::size_t x = 0;
    for (std::size_t l = levels_.size(); l-- > 0;) {
      x = (x << 6) | static_cast<std::size_t>(std::countr_zero(levels_[l][x]));
    }
    std::size_t y = x;
    for (auto& level : levels_) {
      level[y >> 6] &= ~(std::uint64_t{1} << (y & 63));
      y >>= 6;
      if (level[y] != 0) break;
    }
    return x;
  }

 private:
  std::vector<std::vector<std::uint64_t>> levels_;  // levels_[0] is the leaf level
};

class ActiveSet {
 public:
  ActiveSet(Selection selection, std::size_t universe)
      : selection_(selection), bits_(selection == Selection::min_index ? universe : 0) {
    if (selection == Selection::fifo) queue_.reserve(universe);
  }

  bool empty() const { return selection_ == Selection::fifo ? head_ == queue_.size() : bits_.empty(); }
  void push(Vertex v) {
    if (selection_ == Selection::fifo) {
      queue_.push_back(v);
    } else {
      bits_.insert(v);
    }
  }
  Vertex pop() {
    if (selection_ == Selection::fifo) return queue_[head_++];
    return static_cast<Vertex>(bits_.pop_min());
  }

 private:
  Selection selection_;
  MinBitset bits_;
  std::vector<Vertex> queue_;
  std::size_t head_ = 0;
};

struct StepResult {
  double D = 0.0;
  double Delta = 0.0;
  double S = 0.0;
  double A_tilde = 0.0;
  double eps = 0.0;
};

// One decomposition step from state t-1 to t.
StepResult decompose_step(const StepTables& tables, std::int64_t t, double S_prev, std::int64_t A_prev,
                          std::int64_t U_prev, std::int64_t A_now, std::int64_t eta, bool restart) {
  StepResult r;
  const double candidates = static_cast<double>(U_prev - (restart ? 1 : 0));
  const double mean = candidates * tables.pi(t - 1);
  r.D = mean - 1.0;
  r.Delta = static_cast<double>(eta) - mean;
  r.S = S_prev + r.Delta / tables.beta(t);
  r.A_tilde = tables.x(t) + tables.beta(t) * r.S;
  r.eps = (static_cast<double>(A_now) - tables.x(t)) -
          (1.0 - tables.alpha(t)) * (static_cast<double>(A_prev) - tables.x(t - 1)) - r.Delta;
  return r;
}

void fill_decomposition_arrays(ExplorationTrace& trace, const StepTables& tables) {
  const auto size = trace.A.size();
  trace.D.assign(size, 0.0);
  trace.Delta.assign(size, 0.0);
  trace.alpha.assign(size, 0.0);
  trace.beta.assign(size, 1.0);
  trace.S.assign(size, 0.0);
  trace.x.assign(size, 0.0);
  trace.A_tilde.assign(size, 0.0);
  trace.eps.assign(size, 0.0);
  trace.A_tilde[0] = tables.x(0);
  for (std::size_t t = 1; t < size; ++t) {
    const auto ti = static_cast<std::int64_t>(t);
    const StepResult r = decompose_step(tables, ti, trace.S[t - 1], trace.A[t - 1], trace.U[t - 1], trace.A[t],
                                        trace.eta[t], trace.restart[t] != 0);
    trace.D[t] = r.D;
    trace.Delta[t] = r.Delta;
    trace.alpha[t] = tables.alpha(ti);
    trace.beta[t] = tables.beta(ti);
    trace.S[t] = r.S;
    trace.x[t] = tables.x(ti);
    trace.A_tilde[t] = r.A_tilde;
    trace.eps[t] = r.eps;
  }
  trace.final_S = trace.S.back();
}

// Shared driver. Reveal is called as reveal(v, t_explored_before, activate)
// and must call activate(u) for every vertex u that shares a revealed edge
// with v; activate ignores vertices that are not unseen.
template <class Reveal>
ExplorationTrace run_exploration(std::int64_t N, int d, const ExplorationConfig& cfg, const StepTables* tables,
                                 Reveal&& reveal) {
  cfg.validate(N);
  if (!cfg.checkpoints.empty() && tables == nullptr) {
    throw std::invalid_argument("exploration: checkpoints need step tables");
  }
  ExplorationTrace trace;
  trace.N = N;
  trace.d = d;
  trace.k = cfg.k;
  const bool full = cfg.record == Recording::full_trace;
  const std::int64_t limit = cfg.stop == StopRule::hit_zero ? N : cfg.horizon;

  std::vector<std::uint8_t> status(static_cast<std::size_t>(N) + 1, kUnseen);
  ActiveSet active(cfg.selection, static_cast<std::size_t>(N) + 1);
  std::int64_t A = cfg.k;
  std::int64_t U = N - cfg.k;
  for (std::int64_t v = 1; v <= cfg.k; ++v) {
    status[v] = kActive;
    active.push(static_cast<Vertex>(v));
  }
  std::int64_t next_unseen = cfg.k + 1;
  std::int64_t comp = 0;
  double S = 0.0;
  std::int64_t eta = 0;

  auto take_checkpoint = [&](std::int64_t t, double A_tilde) {
    for (auto c : cfg.checkpoints) {
      if (c == t) trace.checkpoints.push_back({t, A, tables->beta(t), S, tables->x(t), A_tilde});
    }
  };
  if (full) {
    const auto reserve = static_cast<std::size_t>(limit) + 1;
    for (auto* v : {&trace.A, &trace.U, &trace.eta, &trace.comp_count, &trace.X}) v->reserve(reserve);
    trace.restart.reserve(reserve);
    trace.A.push_back(A);
    trace.U.push_back(U);
    trace.eta.push_back(0);
    trace.comp_count.push_back(0);
    trace.X.push_back(A);
    trace.restart.push_back(0);
  }
  trace.max_A = A;
  trace.argmax_A = 0;
  if (tables != nullptr) take_checkpoint(0, tables->x(0));

  auto activate = [&](Vertex u) {
    if (status[u] != kUnseen) return;
    status[u] = kActive;
    active.push(u);
    ++eta;
    ++A;
    --U;
  };

  std::int64_t t = 0;
  while (t < limit) {
    const std::int64_t A_prev = A;
    const std::int64_t U_prev = U;
    const bool restart = active.empty();
    Vertex v = 0;
    if (restart) {
      while (status[next_unseen] != kUnseen) ++next_unseen;
      v = static_cast<Vertex>(next_unseen);
      --U;
    } else {
      v = active.pop();
      --A;
    }
    status[v] = kExplored;
    eta = 0;
    reveal(v, t, activate);
    ++t;
    if (U != N - t - A) throw std::logic_error("exploration: U != N - t - A");
    if (A - A_prev == -1) ++comp;

    if (A > trace.max_A) {
      trace.max_A = A;
      trace.argmax_A = t;
    }
    double A_tilde = 0.0;
    if (tables != nullptr) {
      const StepResult r = decompose_step(*tables, t, S, A_prev, U_prev, A, eta, restart);
      S = r.S;
      A_tilde = r.A_tilde;
      take_checkpoint(t, A_tilde);
    }
    if (full) {
      trace.A.push_back(A);
      trace.U.push_back(U);
      trace.eta.push_back(eta);
      trace.comp_count.push_back(comp);
      trace.X.push_back(A - comp);
      trace.restart.push_back(restart ? 1 : 0);
    }
    if (A == 0 && !trace.hit_zero_time) {
      trace.hit_zero_time = t;
      if (cfg.stop == StopRule::hit_zero) break;
    }
  }
  trace.steps = t;
  if (tables != nullptr) {
    trace.final_S = S;
    if (full) fill_decomposition_arrays(trace, *tables);
  }
  return trace;
}

}  // namespace

ExplorationTrace explore_graph(const Hypergraph& h, const ExplorationConfig& cfg, const StepTables* tables) {
  if (tables != nullptr && (tables->params().N != h.N() || tables->params().d != h.d())) {
    throw std::invalid_argument("explore_graph: step tables do not match the hypergraph");
  }
  const Incidence incidence(h);
  return run_exploration(h.N(), h.d(), cfg, tables, [&](Vertex v, std::int64_t, auto& activate) {
    for (auto e : incidence.edges_of(v)) {
      for (Vertex u : h.edge(e)) activate(u);
    }
  });
}

ExplorationTrace explore_stream(const StepTables& tables, const ExplorationConfig& cfg, RngStream& rng) {
  const ModelParams& params = tables.params();
  const std::int64_t N = params.N;
  const auto width = static_cast<std::size_t>(params.d - 1);

  // Non-explored vertices by rank; swap-removal keeps draws O(d).
  std::vector<Vertex> pool(static_cast<std::size_t>(N));
  std::vector<std::uint32_t> position(static_cast<std::size_t>(N) + 1);
  for (std::int64_t v = 1; v <= N; ++v) {
    pool[v - 1] = static_cast<Vertex>(v);
    position[v] = static_cast<std::uint32_t>(v - 1);
  }
  std::vector<std::uint64_t> accepted;
  std::vector<std::uint64_t> draw(width);
  std::set<std::vector<std::uint64_t>> accepted_large;
  constexpr std::uint64_t kLinearDedupLimit = 32;

  return run_exploration(N, params.d, cfg, &tables, [&](Vertex v, std::int64_t t, auto& activate) {
    const std::uint32_t slot = position[v];
    const Vertex last = pool.back();
    pool[slot] = last;
    position[last] = slot;
    pool.pop_back();

    const std::uint64_t m = tables.revealed(t)(rng);
    if (m == 0) return;
    const std::uint64_t n = pool.size();
    accepted.clear();
    accepted_large.clear();
    for (std::uint64_t j = 0; j < m; ++j) {
      for (;;) {
        sample_rank_subset(n, draw, rng);
        bool duplicate = false;
        if (m <= kLinearDedupLimit) {
          for (std::size_t i = 0; i + width <= accepted.size() && !duplicate; i += width) {
            duplicate = std::equal(draw.begin(), draw.end(), accepted.begin() + static_cast<std::ptrdiff_t>(i));
          }
          if (!duplicate) accepted.insert(accepted.end(), draw.begin(), draw.end());
        } else {
          duplicate = !accepted_large.insert(draw).second;
        }
        if (!duplicate) break;
      }
      for (auto r : draw) activate(pool[r]);
    }
  });
}

ExplorationTrace explore_stream(const ModelParams& params, const ExplorationConfig& cfg, RngStream& rng) {
  const StepTables tables(params);
  return explore_stream(tables, cfg, rng);
}

ExplorationTrace decompose(ExplorationTrace trace, const StepTables& tables) {
  if (!trace.has_full_trace()) throw std::invalid_argument("decompose: trace was not recorded in full");
  if (tables.params().N != trace.N || tables.params().d != trace.d) {
    throw std::invalid_argument("decompose: parameters do not match the trace");
  }
  fill_decomposition_arrays(trace, tables);
  return trace;
}

ExplorationTrace decompose(ExplorationTrace trace, const ModelParams& params) {
  const StepTables tables(params);
  return decompose(std::move(trace), tables);
}

void write_trace_csv(std::ostream& out, const ExplorationTrace& trace) {
  if (!trace.is_decomposed()) throw std::invalid_argument("write_trace_csv: trace is not decomposed");
  out << "t,A,U,eta,D,Delta,alpha,beta,S,x,A_tilde,C_count,X\n";
  for (std::size_t t = 0; t < trace.A.size(); ++t) {
    out << t << ',' << trace.A[t] << ',' << trace.U[t] << ',' << trace.eta[t] << ',' << format_double(trace.D[t])
        << ',' << format_double(trace.Delta[t]) << ',' << format_double(trace.alpha[t]) << ','
        << format_double(trace.beta[t]) << ',' << format_double(trace.S[t]) << ',' << format_double(trace.x[t])
        << ',' << format_double(trace.A_tilde[t]) << ',' << trace.comp_count[t] << ',' << trace.X[t] << '\n';
  }
}

}  // namespace hypergiant
