#pragma once

#include <cstdint>
#include <string>

#include "hetsim/opt/builder.hpp"
#include "hetsim/opt/oracle.hpp"
#include "hetsim/sim/stats.hpp"

namespace hetsim::sim {

struct ExperimentConfig {
    opt::Approach approach = opt::Approach::WSRMax;
    bool prioritize = false;
    double alpha = 1.0;
    int realizations = 300;
    std::uint64_t seed = 1;
    net::ScenarioConfig scenario;
    double psi = 127.0;  // ReliabilityPF only
    int workers = 0;     // 0 = hardware concurrency
    lp::SolverConfig solver;

    void validate() const;  // throws ConfigError
};

struct RealizationOutcome {
    lp::SolveStatus status = lp::SolveStatus::Infeasible;
    std::vector<double> sinr;   // per user; empty unless Optimal
    std::vector<int> prbs_held;
    long nodes = 0;
    double seconds = 0.0;
    std::uint64_t channel_hash = 0;
};

struct ExperimentReport {
    ExperimentConfig cfg;
    net::Scenario scenario;
    std::vector<RealizationOutcome> runs;  // indexed by realization

    // Aggregates over the Optimal realizations.
    std::vector<double> mean_sinr;  // per user
    std::vector<double> ci_half;    // 95% half-width per user
    double avg_sinr = 0.0;          // mean of the per-user means
    double sd_normal = 0.0;         // fairness SD over normal users
    double sd_all = 0.0;
    int n_optimal = 0;
    int n_failed = 0;   // non-Optimal solves
    bool degraded = false;  // more than 10% non-Optimal
    long total_nodes = 0;
    double total_seconds = 0.0;
};

/// Runs the configured campaign: realization r draws its channel from an
/// independent child seed of (seed, r), builds the program for the chosen
/// approach, solves it, and extracts per-user SINRs. Realizations run
/// concurrently; every output is deterministic in (config, seed).
ExperimentReport run_campaign(const ExperimentConfig& cfg);

/// Base name fragment like "wsrmax_prio_alpha10" used for output files.
std::string campaign_basename(const ExperimentConfig& cfg);

/// Per-realization rows:
/// realization,user,is_op,alpha,approach,prioritized,sinr,prbs_held
void emit_runs_csv(const ExperimentReport& report, const std::string& path);

/// Aggregate rows user,mean_sinr,ci95,is_op plus a final
/// ALL,avg_sinr,sd_normal,sd_all row.
void emit_aggregate_csv(const ExperimentReport& report, const std::string& path);

/// Plot-ready columns: user index, mean SINR, CI half-width.
void emit_plotdata(const ExperimentReport& report, const std::string& path);

}  // namespace hetsim::sim
