// Command-line front end: Monte-Carlo allocation campaigns, classifier
// evaluation, the solver/oracle agreement suite, and small debug helpers.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hetsim/lp/lp_format.hpp"
#include "hetsim/ml/eval.hpp"
#include "hetsim/sim/experiment.hpp"

namespace {

using namespace hetsim;

opt::Approach parse_approach(const std::string& name) {
    if (name == "wsrmax") return opt::Approach::WSRMax;
    if (name == "pf") return opt::Approach::PF;
    if (name == "pf-rel") return opt::Approach::ReliabilityPF;
    throw CLI::ValidationError("--approach", "expected wsrmax, pf or pf-rel");
}

void print_report_summary(const sim::ExperimentReport& report) {
    std::printf("campaign %s: %d realizations, %d optimal, %d failed%s\n",
                sim::campaign_basename(report.cfg).c_str(), report.cfg.realizations,
                report.n_optimal, report.n_failed, report.degraded ? " [DEGRADED]" : "");
    std::printf("  avg SINR %.4g | SD(normal) %.4g | SD(all) %.4g | nodes %ld | %.1fs cpu\n",
                report.avg_sinr, report.sd_normal, report.sd_all, report.total_nodes,
                report.total_seconds);
    for (int k = 0; k < report.scenario.num_users(); ++k) {
        std::printf("  user %2d%s mean %10.4g  ci95 +/- %.4g\n", k + 1,
                    report.scenario.is_outpatient(k) ? " [OP]" : "     ", report.mean_sinr[k],
                    report.ci_half[k]);
    }
}

int run_campaign_cmd(const std::string& approach, bool prioritize, double alpha, bool sweep,
                     int realizations, std::uint64_t seed, const std::string& scenario_file,
                     double psi, const std::string& out_dir, int workers) {
    sim::ExperimentConfig cfg;
    cfg.approach = parse_approach(approach);
    cfg.prioritize = prioritize;
    cfg.realizations = realizations;
    cfg.seed = seed;
    cfg.psi = psi;
    cfg.workers = workers;
    if (!scenario_file.empty()) cfg.scenario = net::load_scenario_config(scenario_file);

    std::filesystem::create_directories(out_dir);
    std::vector<double> alphas = sweep ? std::vector<double>{1, 2, 5, 10}
                                       : std::vector<double>{alpha};
    for (double a : alphas) {
        cfg.alpha = a;
        const sim::ExperimentReport report = sim::run_campaign(cfg);
        const std::string base = out_dir + "/" + sim::campaign_basename(cfg);
        sim::emit_runs_csv(report, base + "_runs.csv");
        sim::emit_aggregate_csv(report, base + "_agg.csv");
        sim::emit_plotdata(report, base + "_plot.dat");
        print_report_summary(report);
    }
    return 0;
}

int evalml_cmd(const std::string& dataset_file, int folds, const std::string& out_file,
               std::uint64_t seed) {
    const ml::PatientDataset ds = ml::load_dataset_csv(dataset_file);
    const ml::EnsembleModel model = ml::train_ensemble(ds.records);

    std::string csv = ml::metric_csv_header() + ",cv_accuracy\n";
    const auto pool = ds.all_records();
    for (auto kind : {ml::ClassifierKind::NaiveBayes, ml::ClassifierKind::LogisticRegression,
                      ml::ClassifierKind::DecisionTree, ml::ClassifierKind::SoftVote}) {
        const auto counts = ml::confusion(ml::make_predictor(kind, model), ds.test_records);
        const auto report = ml::metrics(counts);
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(kind)));
        const double cv = ml::k_fold_cv(pool, folds, kind, rng);
        char cv_buf[32];
        std::snprintf(cv_buf, sizeof(cv_buf), "%.4g", cv);
        csv += ml::metric_csv_row("op" + std::to_string(ds.op_id), ml::classifier_name(kind),
                                  report) +
               "," + cv_buf + "\n";
    }
    std::cout << csv;
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw ConfigError("cannot write " + out_file);
        out << csv;
    }
    return 0;
}

int gen_dataset_cmd(const std::string& out_file, std::uint64_t seed, int op_id) {
    Rng rng(seed);
    const auto ds = ml::generate_synthetic_dataset(ml::SyntheticProfile::planted_separation(),
                                                   op_id, rng);
    ml::save_dataset_csv(ds, out_file);
    std::printf("wrote %zu train + %zu test records to %s\n", ds.records.size(),
                ds.test_records.size(), out_file.c_str());
    return 0;
}

int oracle_check_cmd(int instances, std::uint64_t seed) {
    net::ScenarioConfig toy;
    toy.n_pbs = 1;  // 2 BSs
    toy.n_users = 3;
    toy.n_normal_users = 2;
    toy.n_prbs_per_bs = 2;
    toy.op_voting = {0.84};

    int failures = 0;
    double worst_rel = 0.0;
    for (int i = 0; i < instances; ++i) {
        Rng rng(derive_seed(seed, i));
        const net::Scenario scenario = net::generate_scenario(toy, rng);
        const net::ChannelRealization ch = net::realize_channel(scenario, rng);
        const auto up = opt::priorities(scenario, 10.0, true);

        // WSRMax must agree with the oracle to 1e-4 relative.
        opt::BuildResult build = opt::build_wsrmax(scenario, ch, up);
        const lp::LpSolution sol = lp::solve_milp(build.program);
        const opt::OracleResult oracle =
            opt::oracle_assign(scenario, ch, {opt::Approach::WSRMax, true, up, 0.0});
        const double rel = std::abs(sol.objective - oracle.objective) /
                           std::max(1.0, std::abs(oracle.objective));
        worst_rel = std::max(worst_rel, rel);
        if (sol.status != lp::SolveStatus::Optimal || rel > 1e-4) {
            ++failures;
            std::printf("instance %d: solver %.10g vs oracle %.10g (rel %.2e) [%s]\n", i,
                        sol.objective, oracle.objective, rel, lp::to_string(sol.status));
            continue;
        }

        // PF: the envelope objective must dominate the true-ln optimum and
        // stay within the declared gap.
        opt::BuildResult pf = opt::build_pf(scenario, ch, up, false);
        const lp::LpSolution pf_sol = lp::solve_milp(pf.program);
        const opt::OracleResult pf_oracle =
            opt::oracle_assign(scenario, ch, {opt::Approach::PF, false, up, 0.0});
        if (pf_sol.status != lp::SolveStatus::Optimal ||
            pf_sol.objective < pf_oracle.objective - 1e-9 ||
            pf_sol.objective > pf_oracle.objective + pf.envelope_gap_total + 1e-9) {
            ++failures;
            std::printf("instance %d (pf): solver %.10g vs oracle %.10g gap %.3g [%s]\n", i,
                        pf_sol.objective, pf_oracle.objective, pf.envelope_gap_total,
                        lp::to_string(pf_sol.status));
        }
    }
    std::printf("oracle-check: %d/%d instances agree (worst wsrmax rel err %.2e)\n",
                instances - failures, instances, worst_rel);
    return failures == 0 ? 0 : 1;
}

int solve_lp_cmd(const std::string& path, bool as_milp) {
    const lp::MilpProgram prog = lp::parse_lp_file(path);
    const lp::LpSolution sol = as_milp ? lp::solve_milp(prog) : lp::solve_lp(prog);
    std::cout << lp::solution_lines(prog, sol);
    return sol.status == lp::SolveStatus::Optimal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HetNet uplink PRB allocation simulator"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run a Monte-Carlo allocation campaign");
    std::string approach = "wsrmax", scenario_file, out_dir = "out";
    bool prioritize = false, sweep = false;
    double alpha = 1.0, psi = 127.0;
    int realizations = 300, workers = 0;
    std::uint64_t seed = 1;
    run->add_option("--approach", approach, "wsrmax | pf | pf-rel")->capture_default_str();
    run->add_flag("--prioritize", prioritize, "apply outpatient priorities");
    run->add_option("--alpha", alpha, "priority tuning factor")->capture_default_str();
    run->add_flag("--sweep", sweep, "run the alpha sweep {1,2,5,10}");
    run->add_option("--realizations", realizations)->capture_default_str();
    run->add_option("--seed", seed)->capture_default_str();
    run->add_option("--scenario", scenario_file, "scenario config JSON (defaults when omitted)");
    run->add_option("--psi", psi, "minimum SINR for pf-rel")->capture_default_str();
    run->add_option("--out", out_dir, "output directory")->capture_default_str();
    run->add_option("--workers", workers, "worker threads (0 = all cores)");

    // evalml
    auto* evalml = app.add_subcommand("evalml", "evaluate the classifier ensemble on a dataset");
    std::string dataset_file, eval_out;
    int folds = 10;
    std::uint64_t eval_seed = 1;
    evalml->add_option("--dataset", dataset_file, "dataset CSV")->required();
    evalml->add_option("--folds", folds)->capture_default_str();
    evalml->add_option("--out", eval_out, "also write the metric CSV here");
    evalml->add_option("--seed", eval_seed)->capture_default_str();

    // gen-dataset
    auto* gen = app.add_subcommand("gen-dataset", "generate a synthetic outpatient dataset CSV");
    std::string gen_out = "dataset.csv";
    std::uint64_t gen_seed = 1;
    int op_id = 1;
    gen->add_option("--out", gen_out)->capture_default_str();
    gen->add_option("--seed", gen_seed)->capture_default_str();
    gen->add_option("--op-id", op_id)->capture_default_str();

    // oracle-check
    auto* oracle = app.add_subcommand("oracle-check", "solver vs exhaustive oracle agreement");
    int instances = 50;
    std::uint64_t oracle_seed = 7;
    oracle->add_option("--instances", instances)->capture_default_str();
    oracle->add_option("--seed", oracle_seed)->capture_default_str();

    // solve-lp
    auto* solve = app.add_subcommand("solve-lp", "solve an LP text file and print the solution");
    std::string lp_path;
    bool as_milp = false;
    solve->add_option("file", lp_path, "LP format file")->required();
    solve->add_flag("--milp", as_milp, "enforce integrality on Binaries");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            return run_campaign_cmd(approach, prioritize, alpha, sweep, realizations, seed,
                                    scenario_file, psi, out_dir, workers);
        }
        if (*evalml) return evalml_cmd(dataset_file, folds, eval_out, eval_seed);
        if (*gen) return gen_dataset_cmd(gen_out, gen_seed, op_id);
        if (*oracle) return oracle_check_cmd(instances, oracle_seed);
        if (*solve) return solve_lp_cmd(lp_path, as_milp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
