#include "hypergiant/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "hypergiant/csv.hpp"

namespace hypergiant {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return {buffer, end};
}

namespace {

// JSON has no NaN or infinity; those become null.
Json number(double value) { return std::isfinite(value) ? Json(value) : Json(nullptr); }

Json interval_json(const Interval& i) { return Json::array({number(i.lo), number(i.hi)}); }

}  // namespace

Json theory_json(const TheoryConstants& theory, const std::optional<ModelParams>& params) {
  Json j;
  j["d"] = theory.d;
  j["lambda"] = theory.lambda;
  j["rho2"] = theory.rho2;
  j["rho_d"] = theory.rho_d;
  j["lambda_star"] = theory.lambda_star;
  j["c"] = theory.c;
  j["sigma2"] = theory.sigma2;
  if (params) {
    j["N"] = params->N;
    j["numeric_c"] = numeric_c(*params);
  }
  return j;
}

Json exploration_summary_json(const ExplorationTrace& trace) {
  Json j;
  j["hit_zero_time"] = trace.hit_zero_time ? Json(*trace.hit_zero_time) : Json(nullptr);
  j["max_A"] = trace.max_A;
  j["argmax_A"] = trace.argmax_A;
  j["final_S"] = trace.final_S ? number(*trace.final_S) : Json(nullptr);
  return j;
}

Json spec_echo(ExperimentKind kind, const ExperimentSpec& spec) {
  Json j;
  j["kind"] = to_string(kind);
  j["d"] = spec.d;
  j["lambda"] = spec.lambda;
  j["N"] = spec.N;
  j["reps"] = spec.reps;
  j["alpha"] = spec.alpha;
  j["y"] = spec.y_grid;
  j["zeta"] = spec.zeta;
  j["gamma"] = spec.gamma_exp;
  j["xi"] = spec.xi_exp;
  j["mode"] = to_string(spec.mode);
  j["seed"] = spec.master_seed;
  return j;
}

std::uint64_t spec_hash(ExperimentKind kind, const ExperimentSpec& spec) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : spec_echo(kind, spec).dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json report_json(const ExperimentReport& report, bool include_wall_time) {
  Json j;
  j["kind"] = to_string(report.kind);
  j["spec"] = spec_echo(report.kind, report.spec);
  j["theory"] = theory_json(report.theory);
  if (report.clt) {
    const auto& c = *report.clt;
    j["clt"] = {{"N", c.N},
                {"d", c.d},
                {"lambda", c.lambda},
                {"reps", c.reps},
                {"mean_scaled", number(c.mean_scaled)},
                {"mean_se", number(c.mean_se)},
                {"var_scaled", number(c.var_scaled)},
                {"sigma2_theory", c.sigma2_theory}};
  }
  if (report.kind == ExperimentKind::tail) {
    Json rows = Json::array();
    for (const auto& t : report.tail) {
      rows.push_back({{"N", t.N},
                      {"y", t.y},
                      {"threshold", t.threshold},
                      {"reps", t.reps},
                      {"hits_up", t.hits_up},
                      {"hits_down", t.hits_down},
                      {"p_hat", t.p_hat},
                      {"wilson_ci", interval_json(t.ci)},
                      {"p_up", t.p_up},
                      {"p_down", t.p_down},
                      {"rate_hat", number(t.rate_hat)},
                      {"rate_ci", interval_json(t.rate_ci)},
                      {"rate_lower_bound_only", t.rate_lower_bound_only},
                      {"J_y", t.J_y},
                      {"observability", t.observability}});
    }
    j["tail"] = rows;
  }
  if (report.kind == ExperimentKind::martingale) {
    Json rows = Json::array();
    for (const auto& m : report.martingale) {
      rows.push_back({{"zeta", m.zeta},
                      {"horizon", m.horizon},
                      {"reps", m.reps},
                      {"mean", number(m.mean)},
                      {"mean_se", number(m.mean_se)},
                      {"var_over_N", number(m.var_over_N)},
                      {"c_theory", m.c_theory},
                      {"relative_change_vs_zero", number(m.relative_change_vs_zero)},
                      {"size_rhs_mean", number(m.size_rhs_mean)},
                      {"size_rhs_se", number(m.size_rhs_se)}});
    }
    j["martingale"] = rows;
  }
  if (report.coupling) {
    const auto& c = *report.coupling;
    j["coupling"] = {{"N", c.N},
                     {"reps", c.reps},
                     {"k", c.seed_count},
                     {"r", c.slack},
                     {"giant_exceeds", c.giant_exceeds},
                     {"seeds_exceed", c.seeds_exceed},
                     {"freq_giant_exceeds", c.freq_giant_exceeds},
                     {"freq_seeds_exceed", c.freq_seeds_exceed},
                     {"mean_gap", number(c.mean_gap)},
                     {"sd_gap", number(c.sd_gap)}};
  }
  j["warnings"] = report.warnings;
  Json prov;
  prov["seed"] = report.provenance.seed;
  prov["spec_hash"] = report.provenance.spec_hash;
  if (include_wall_time) prov["wall_time_s"] = report.provenance.wall_time_s;
  j["provenance"] = prov;
  return j;
}

void write_tail_csv(std::ostream& out, const std::vector<TailRecord>& records) {
  out << "N,d,lambda,alpha,y,reps,hits_up,hits_down,p_hat,ci_lo,ci_hi,rate_hat,J_y\n";
  for (const auto& t : records) {
    out << t.N << ',' << t.d << ',' << format_double(t.lambda) << ',' << format_double(t.alpha) << ','
        << format_double(t.y) << ',' << t.reps << ',' << t.hits_up << ',' << t.hits_down << ','
        << format_double(t.p_hat) << ',' << format_double(t.ci.lo) << ',' << format_double(t.ci.hi) << ','
        << format_double(t.rate_hat) << ',' << format_double(t.J_y) << '\n';
  }
}

void write_clt_csv(std::ostream& out, const CltRecord& c) {
  out << "N,d,lambda,reps,mean_scaled,var_scaled,sigma2_theory\n";
  out << c.N << ',' << c.d << ',' << format_double(c.lambda) << ',' << c.reps << ',' << format_double(c.mean_scaled)
      << ',' << format_double(c.var_scaled) << ',' << format_double(c.sigma2_theory) << '\n';
}

void write_martingale_csv(std::ostream& out, const ExperimentSpec& spec,
                          const std::vector<MartingaleRecord>& records) {
  out << "N,d,lambda,alpha,zeta,horizon,reps,mean,mean_se,var_over_N,c_theory,relative_change_vs_zero,size_rhs_mean,size_rhs_se\n";
  for (const auto& m : records) {
    out << spec.N << ',' << spec.d << ',' << format_double(spec.lambda) << ',' << format_double(spec.alpha) << ','
        << format_double(m.zeta) << ',' << m.horizon << ',' << m.reps << ',' << format_double(m.mean) << ','
        << format_double(m.mean_se) << ',' << format_double(m.var_over_N) << ',' << format_double(m.c_theory)
        << ',' << format_double(m.relative_change_vs_zero) << ',' << format_double(m.size_rhs_mean) << ','
        << format_double(m.size_rhs_se) << '\n';
  }
}

void write_coupling_csv(std::ostream& out, const ExperimentSpec& spec, const CouplingRecord& c) {
  out << "N,d,lambda,reps,k,r,giant_exceeds,seeds_exceed,freq_giant_exceeds,freq_seeds_exceed,mean_gap,sd_gap\n";
  out << c.N << ',' << spec.d << ',' << format_double(spec.lambda) << ',' << c.reps << ',' << c.seed_count << ','
      << format_double(c.slack) << ',' << c.giant_exceeds << ',' << c.seeds_exceed << ','
      << format_double(c.freq_giant_exceeds) << ',' << format_double(c.freq_seeds_exceed) << ','
      << format_double(c.mean_gap) << ',' << format_double(c.sd_gap) << '\n';
}

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
  switch (report.kind) {
    case ExperimentKind::clt: write_clt_csv(out, *report.clt); break;
    case ExperimentKind::tail: write_tail_csv(out, report.tail); break;
    case ExperimentKind::martingale: write_martingale_csv(out, report.spec, report.martingale); break;
    case ExperimentKind::coupling: write_coupling_csv(out, report.spec, *report.coupling); break;
  }
}

}  // namespace hypergiant
