// hypergiant: command-line front end.
//
// Exit codes: 0 success, 1 invalid input, 2 runtime failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypergiant/components.hpp"
#include "hypergiant/exploration.hpp"
#include "hypergiant/hypergraph.hpp"
#include "hypergiant/hypergraph_io.hpp"
#include "hypergiant/montecarlo.hpp"
#include "hypergiant/report.hpp"
#include "hypergiant/rng.hpp"
#include "hypergiant/stats.hpp"
#include "hypergiant/theory.hpp"

namespace hg = hypergiant;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitRuntime = 2;

// Writes to the file at path, or to stdout when path is empty.
template <class Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
  if (!out) throw std::runtime_error("failed writing " + path);
}

void emit_json(const std::string& path, const hg::Json& j) {
  emit(path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

struct ModelFlags {
  int d = 3;
  double lambda = 1.5;
  std::int64_t N = 1000;
};

void add_model_flags(CLI::App* cmd, ModelFlags& m, bool need_N) {
  cmd->add_option("--d", m.d, "Edge cardinality")->required()->check(CLI::Range(2, 1000));
  cmd->add_option("--lambda", m.lambda, "Branching factor")->required();
  auto* n = cmd->add_option("--N", m.N, "Vertex count");
  if (need_N) n->required();
}

struct McFlags {
  ModelFlags model;
  std::int64_t reps = 1000;
  double alpha = 0.6;
  std::vector<double> y;
  std::vector<double> zeta{0.0};
  double gamma = 0.35;
  double xi = 0.45;
  std::optional<std::string> mode;
  std::uint64_t seed = 1;
  std::optional<int> threads;
  std::string format = "csv";
  std::string out;
  std::string report;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Giant component toolkit for random d-uniform hypergraphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // theory
  ModelFlags theory_flags;
  std::optional<std::int64_t> theory_N;
  std::string theory_out;
  auto* theory = app.add_subcommand("theory", "Fixed points and constants as JSON");
  theory->add_option("--d", theory_flags.d, "Edge cardinality")->required()->check(CLI::Range(2, 1000));
  theory->add_option("--lambda", theory_flags.lambda, "Branching factor")->required();
  theory->add_option("--N", theory_N, "Vertex count; adds numeric_c");
  theory->add_option("--out", theory_out, "Output file (default stdout)");

  // sample
  ModelFlags sample_flags;
  std::uint64_t sample_seed = 1;
  std::uint64_t sample_stream = 0;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "Sample G^d(N,p) and write an HGR v1 file");
  add_model_flags(sample, sample_flags, true);
  sample->add_option("--seed", sample_seed, "Master seed")->required();
  sample->add_option("--stream", sample_stream, "Stream index");
  sample->add_option("--out", sample_out, "Output file (default stdout)");

  // components
  std::string components_in;
  std::string components_out;
  auto* components = app.add_subcommand("components", "Component size histogram of an HGR file");
  components->add_option("--in", components_in, "HGR v1 file")->required()->check(CLI::ExistingFile);
  components->add_option("--out", components_out, "Output file (default stdout)");

  // explore
  ModelFlags explore_flags;
  std::string backend = "stream";
  std::int64_t explore_k = 1;
  std::uint64_t explore_seed = 1;
  std::optional<std::int64_t> explore_horizon;
  std::string selection = "min_index";
  std::string trace_path;
  std::string explore_out;
  auto* explore = app.add_subcommand("explore", "Run one exploration; summary JSON and optional trace CSV");
  explore->add_option("--backend", backend, "graph or stream")->check(CLI::IsMember({"graph", "stream"}));
  add_model_flags(explore, explore_flags, true);
  explore->add_option("--k", explore_k, "Initially active vertices 1..k");
  explore->add_option("--seed", explore_seed, "Master seed")->required();
  explore->add_option("--horizon", explore_horizon, "Run to this step instead of stopping at the first zero");
  explore->add_option("--selection", selection, "min_index or fifo")->check(CLI::IsMember({"min_index", "fifo"}));
  explore->add_option("--trace", trace_path, "Write the full trace CSV here");
  explore->add_option("--out", explore_out, "Summary output file (default stdout)");

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
  mc->require_subcommand(1);
  McFlags mcf;
  std::map<std::string, hg::ExperimentKind> kinds{{"clt", hg::ExperimentKind::clt},
                                                  {"tail", hg::ExperimentKind::tail},
                                                  {"martingale", hg::ExperimentKind::martingale},
                                                  {"coupling", hg::ExperimentKind::coupling}};
  std::optional<hg::ExperimentKind> chosen;
  for (const auto& [name, kind] : kinds) {
    auto* cmd = mc->add_subcommand(name, "Experiment: " + name);
    add_model_flags(cmd, mcf.model, true);
    cmd->add_option("--reps", mcf.reps, "Replicas")->check(CLI::NonNegativeNumber);
    cmd->add_option("--alpha", mcf.alpha, "Deviation exponent in (1/2, 1)");
    cmd->add_option("--y", mcf.y, "Deviation levels (tail)");
    cmd->add_option("--zeta", mcf.zeta, "Horizon shifts (martingale)");
    cmd->add_option("--gamma", mcf.gamma, "Seed-count exponent");
    cmd->add_option("--xi", mcf.xi, "Slack exponent");
    cmd->add_option("--mode", mcf.mode, "exact or proxy")->check(CLI::IsMember({"exact", "proxy"}));
    cmd->add_option("--seed", mcf.seed, "Master seed");
    cmd->add_option("--threads", mcf.threads, "Worker threads (overrides HYPERGIANT_THREADS)");
    cmd->add_option("--format", mcf.format, "csv or json on the output stream")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", mcf.out, "Output file (default stdout)");
    cmd->add_option("--report", mcf.report, "Also write the JSON report here");
    cmd->callback([&chosen, kind = kind] { chosen = kind; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*theory) {
      const auto constants = hg::TheoryConstants::compute(theory_flags.d, theory_flags.lambda);
      std::optional<hg::ModelParams> params;
      if (theory_N) params = hg::ModelParams::make(theory_flags.d, theory_flags.lambda, *theory_N);
      emit_json(theory_out, hg::theory_json(constants, params));
    } else if (*sample) {
      const auto params = hg::ModelParams::make(sample_flags.d, sample_flags.lambda, sample_flags.N);
      hg::RngStream rng(sample_seed, sample_stream);
      const hg::Hypergraph h = hg::sample_hypergraph(params, rng);
      emit(sample_out, [&](std::ostream& os) { hg::write_hgr(os, h); });
    } else if (*components) {
      const hg::Hypergraph h = hg::read_hgr(std::filesystem::path(components_in));
      const auto summary = hg::connected_components(h);
      emit(components_out, [&](std::ostream& os) { hg::write_histogram_csv(os, summary); });
    } else if (*explore) {
      const auto params = hg::ModelParams::make(explore_flags.d, explore_flags.lambda, explore_flags.N);
      hg::ExplorationConfig cfg;
      cfg.k = explore_k;
      cfg.backend = backend == "graph" ? hg::Backend::graph : hg::Backend::stream;
      if (explore_horizon) {
        cfg.stop = hg::StopRule::run_to_horizon;
        cfg.horizon = *explore_horizon;
      }
      cfg.selection = selection == "fifo" ? hg::Selection::fifo : hg::Selection::min_index;
      cfg.record = trace_path.empty() ? hg::Recording::summary : hg::Recording::full_trace;
      cfg.validate(params.N);
      const hg::StepTables tables(params);
      hg::RngStream rng(explore_seed, 0);
      hg::ExplorationTrace trace;
      if (cfg.backend == hg::Backend::graph) {
        const hg::Hypergraph h = hg::sample_hypergraph(params, rng);
        trace = hg::explore_graph(h, cfg, &tables);
      } else {
        trace = hg::explore_stream(tables, cfg, rng);
      }
      if (!trace_path.empty()) emit(trace_path, [&](std::ostream& os) { hg::write_trace_csv(os, trace); });
      emit_json(explore_out, hg::exploration_summary_json(trace));
    } else if (chosen) {
      hg::ExperimentSpec spec;
      spec.d = mcf.model.d;
      spec.lambda = mcf.model.lambda;
      spec.N = mcf.model.N;
      spec.reps = mcf.reps;
      spec.alpha = mcf.alpha;
      spec.y_grid = mcf.y;
      spec.zeta = mcf.zeta;
      spec.gamma_exp = mcf.gamma;
      spec.xi_exp = mcf.xi;
      const bool default_exact = *chosen == hg::ExperimentKind::coupling;
      spec.mode = mcf.mode ? (*mcf.mode == "exact" ? hg::Mode::exact : hg::Mode::proxy)
                           : (default_exact ? hg::Mode::exact : hg::Mode::proxy);
      spec.master_seed = mcf.seed;
      spec.threads = hg::resolve_threads(mcf.threads);
      spec.validate();
      const auto report = hg::run_experiment(*chosen, spec);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
      const hg::Json j = hg::report_json(report);
      if (mcf.format == "json") {
        emit_json(mcf.out, j);
      } else {
        emit(mcf.out, [&](std::ostream& os) { hg::write_report_csv(os, report); });
      }
      if (!mcf.report.empty()) emit_json(mcf.report, j);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
