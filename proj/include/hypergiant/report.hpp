#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "json.hpp"

#include "hypergiant/exploration.hpp"
#include "hypergiant/montecarlo.hpp"
#include "hypergiant/theory.hpp"

namespace hypergiant {

using Json = nlohmann::ordered_json;

/// Keys d, lambda, rho2, rho_d, lambda_star, c, sigma2; with params also N
/// and numeric_c.
Json theory_json(const TheoryConstants& theory, const std::optional<ModelParams>& params = std::nullopt);

/// {hit_zero_time, max_A, argmax_A, final_S}; absent values are null.
Json exploration_summary_json(const ExplorationTrace& trace);

/// Every spec field that influences results. The thread count is left out,
/// since results do not depend on it.
Json spec_echo(ExperimentKind kind, const ExperimentSpec& spec);

/// FNV-1a 64 of the compact spec echo.
std::uint64_t spec_hash(ExperimentKind kind, const ExperimentSpec& spec);

/// Full report. Without wall time the output depends only on the spec.
Json report_json(const ExperimentReport& report, bool include_wall_time = true);

/// Header `N,d,lambda,alpha,y,reps,hits_up,hits_down,p_hat,ci_lo,ci_hi,rate_hat,J_y`.
void write_tail_csv(std::ostream& out, const std::vector<TailRecord>& records);
/// Header `N,d,lambda,reps,mean_scaled,var_scaled,sigma2_theory`.
void write_clt_csv(std::ostream& out, const CltRecord& record);
/// Header `N,d,lambda,alpha,zeta,horizon,reps,mean,mean_se,var_over_N,c_theory,relative_change_vs_zero`.
void write_martingale_csv(std::ostream& out, const ExperimentSpec& spec, const std::vector<MartingaleRecord>& records);
/// Header `N,d,lambda,reps,k,r,giant_exceeds,seeds_exceed,freq_giant_exceeds,freq_seeds_exceed,mean_gap,sd_gap`.
void write_coupling_csv(std::ostream& out, const ExperimentSpec& spec, const CouplingRecord& record);
/// The CSV matching the report's kind.
void write_report_csv(std::ostream& out, const ExperimentReport& report);

}  // namespace hypergiant
