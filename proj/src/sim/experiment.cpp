#include "hetsim/sim/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <thread>

namespace hetsim::sim {

void ExperimentConfig::validate() const {
    if (realizations < 1) throw ConfigError("realizations must be >= 1");
    if (alpha < 0.0) throw ConfigError("alpha must be >= 0");
    if (approach == opt::Approach::ReliabilityPF && !(psi > 0.0)) {
        throw ConfigError("pf-rel requires psi > 0");
    }
    scenario.validate();
}

namespace {

RealizationOutcome solve_one(const ExperimentConfig& cfg, const net::Scenario& scenario,
                             const std::vector<double>& up, int realization) {
    RealizationOutcome out;
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(realization) + 1));
    const net::ChannelRealization ch = net::realize_channel(scenario, rng);
    out.channel_hash = ch.hash();

    const auto start = std::chrono::steady_clock::now();
    opt::BuildResult build;
    switch (cfg.approach) {
        case opt::Approach::WSRMax:
            build = opt::build_wsrmax(scenario, ch, up);
            break;
        case opt::Approach::PF:
            build = opt::build_pf(scenario, ch, up, cfg.prioritize);
            break;
        case opt::Approach::ReliabilityPF:
            build = opt::build_pf(scenario, ch, up, cfg.prioritize);
            opt::add_reliability(build, scenario, cfg.psi);
            break;
    }
    const lp::LpSolution sol = lp::solve_milp(build.program, cfg.solver);
    out.status = sol.status;
    out.nodes = sol.nodes;
    if (sol.status == lp::SolveStatus::Optimal) {
        const opt::AssignmentSolution extracted = opt::extract_solution(build, sol, scenario, ch);
        out.sinr = extracted.sinr;
        out.prbs_held = extracted.prbs_held;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace

ExperimentReport run_campaign(const ExperimentConfig& cfg) {
    cfg.validate();

    ExperimentReport report;
    report.cfg = cfg;
    {
        Rng scenario_rng(cfg.seed);
        report.scenario = net::generate_scenario(cfg.scenario, scenario_rng);
    }
    const std::vector<double> up = opt::priorities(report.scenario, cfg.alpha, cfg.prioritize);
    const int n_runs = cfg.realizations;
    report.runs.resize(n_runs);

    int workers = cfg.workers > 0 ? cfg.workers
                                  : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, n_runs));

    // Results land in slots indexed by realization, so the report does not
    // depend on scheduling order.
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            const int r = next.fetch_add(1);
            if (r >= n_runs) return;
            report.runs[r] = solve_one(cfg, report.scenario, up, r);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const int n_users = report.scenario.num_users();
    report.mean_sinr.assign(n_users, 0.0);
    report.ci_half.assign(n_users, 0.0);
    std::vector<std::vector<double>> samples(n_users);
    for (const auto& run : report.runs) {
        if (run.status == lp::SolveStatus::Optimal) {
            report.n_optimal += 1;
            for (int k = 0; k < n_users; ++k) samples[k].push_back(run.sinr[k]);
            report.total_nodes += run.nodes;
        } else {
            report.n_failed += 1;
        }
        report.total_seconds += run.seconds;
    }
    report.degraded = report.n_failed > cfg.realizations / 10;

    if (report.n_optimal > 0) {
        for (int k = 0; k < n_users; ++k) {
            report.mean_sinr[k] = mean(samples[k]);
            report.ci_half[k] = samples[k].size() >= 2 ? confidence_interval(samples[k]).half_width
                                                       : 0.0;
        }
        report.avg_sinr = mean(report.mean_sinr);

        std::vector<int> normal, all;
        for (int k = 0; k < n_users; ++k) {
            all.push_back(k);
            if (!report.scenario.is_outpatient(k)) normal.push_back(k);
        }
        report.sd_normal = normal.size() >= 2 ? fairness_sd(report.mean_sinr, normal) : 0.0;
        report.sd_all = all.size() >= 2 ? fairness_sd(report.mean_sinr, all) : 0.0;
    }
    return report;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write output file: " + path);
    return out;
}

}  // namespace

std::string campaign_basename(const ExperimentConfig& cfg) {
    std::string name = opt::to_string(cfg.approach);
    name += cfg.prioritize ? "_prio" : "_base";
    name += "_alpha" + fmt(cfg.alpha);
    return name;
}

void emit_runs_csv(const ExperimentReport& report, const std::string& path) {
    auto out = open_out(path);
    out << "realization,user,is_op,alpha,approach,prioritized,sinr,prbs_held\n";
    const char* approach = opt::to_string(report.cfg.approach);
    for (std::size_t r = 0; r < report.runs.size(); ++r) {
        const auto& run = report.runs[r];
        if (run.status != lp::SolveStatus::Optimal) continue;
        for (int k = 0; k < report.scenario.num_users(); ++k) {
            out << (r + 1) << ',' << (k + 1) << ',' << (report.scenario.is_outpatient(k) ? 1 : 0)
                << ',' << fmt(report.cfg.alpha) << ',' << approach << ','
                << (report.cfg.prioritize ? 1 : 0) << ',' << fmt(run.sinr[k]) << ','
                << run.prbs_held[k] << '\n';
        }
    }
}

void emit_aggregate_csv(const ExperimentReport& report, const std::string& path) {
    auto out = open_out(path);
    out << "user,mean_sinr,ci95,is_op\n";
    for (int k = 0; k < report.scenario.num_users(); ++k) {
        out << (k + 1) << ',' << fmt(report.mean_sinr[k]) << ',' << fmt(report.ci_half[k]) << ','
            << (report.scenario.is_outpatient(k) ? 1 : 0) << '\n';
    }
    out << "ALL," << fmt(report.avg_sinr) << ',' << fmt(report.sd_normal) << ','
        << fmt(report.sd_all) << '\n';
    out << "# optimal=" << report.n_optimal << " failed=" << report.n_failed
        << " degraded=" << (report.degraded ? 1 : 0) << '\n';
}

void emit_plotdata(const ExperimentReport& report, const std::string& path) {
    auto out = open_out(path);
    for (int k = 0; k < report.scenario.num_users(); ++k) {
        out << (k + 1) << ' ' << fmt(report.mean_sinr[k]) << ' ' << fmt(report.ci_half[k]) << '\n';
    }
}

}  // namespace hetsim::sim
