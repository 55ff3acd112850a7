#include <cmath>
#include <limits>
#include <queue>

#include "hetsim/lp/simplex.hpp"
#include "simplex_internal.hpp"

namespace hetsim::lp {

namespace {

struct Node {
    double bound = std::numeric_limits<double>::infinity();  // parent LP objective
    long id = 0;
    std::vector<std::pair<int, double>> fixes;  // (binary var, 0 or 1)
};

struct NodeOrder {
    // Best bound first; FIFO among exact ties keeps the search deterministic.
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound < b.bound;
        return a.id > b.id;
    }
};

}  // namespace

LpSolution solve_milp(const MilpProgram& prog, const SolverConfig& cfg) {
    const detail::ScaledLp lp = detail::build_scaled(prog);
    detail::SimplexEngine engine(lp, cfg);

    LpSolution result;
    result.status = SolveStatus::Infeasible;

    bool have_incumbent = false;
    double incumbent_obj = -std::numeric_limits<double>::infinity();
    std::vector<double> incumbent_values;

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    open.push(Node{});
    long next_id = 1;
    long nodes_solved = 0;
    long total_iterations = 0;
    bool hit_limit = false;
    bool root_unbounded = false;

    std::vector<double> lo = lp.lo;
    std::vector<double> hi = lp.hi;

    const auto prune_threshold = [&]() {
        return incumbent_obj + cfg.relative_gap * std::max(1.0, std::abs(incumbent_obj));
    };

    while (!open.empty()) {
        const Node node = open.top();
        open.pop();
        if (have_incumbent && node.bound <= prune_threshold()) break;  // bound proof
        if (nodes_solved >= cfg.node_limit) {
            hit_limit = true;
            break;
        }

        lo = lp.lo;
        hi = lp.hi;
        for (const auto& [var, val] : node.fixes) {
            lo[var] = val;
            hi[var] = val;
        }

        const SolveStatus st = engine.solve(lo, hi);
        ++nodes_solved;
        total_iterations += engine.iterations();

        if (st == SolveStatus::Infeasible) continue;
        if (st == SolveStatus::Unbounded) {
            if (nodes_solved == 1) root_unbounded = true;
            hit_limit = !root_unbounded;
            break;
        }
        if (st == SolveStatus::IterationLimit) {
            hit_limit = true;
            break;
        }

        const double bound = engine.objective();
        if (nodes_solved == 1) result.root_bound = bound;
        if (have_incumbent && bound <= prune_threshold()) continue;

        // Most-fractional binary; ties to the lowest variable index.
        const std::vector<double>& x = engine.structural_values();
        int branch_var = -1;
        double worst_frac = cfg.integrality_tol;
        for (int j : lp.binaries) {
            const double frac = std::abs(x[j] - std::round(x[j]));
            if (frac > worst_frac) {
                worst_frac = frac;
                branch_var = j;
            }
        }

        if (branch_var < 0) {
            // Integral: snap binaries exactly and rescore.
            std::vector<double> snapped = x;
            for (int j : lp.binaries) snapped[j] = std::round(snapped[j]);
            const double obj = prog.eval_objective(snapped);
            if (!have_incumbent || obj > incumbent_obj) {
                have_incumbent = true;
                incumbent_obj = obj;
                incumbent_values = std::move(snapped);
            }
            continue;
        }

        Node down{bound, next_id++, node.fixes};
        down.fixes.emplace_back(branch_var, 0.0);
        Node up{bound, next_id++, node.fixes};
        up.fixes.emplace_back(branch_var, 1.0);
        open.push(std::move(down));
        open.push(std::move(up));
    }

    result.iterations = total_iterations;
    result.nodes = nodes_solved;
    if (root_unbounded) {
        result.status = SolveStatus::Unbounded;
        return result;
    }
    if (have_incumbent) {
        result.values = std::move(incumbent_values);
        result.objective = incumbent_obj;
        result.status = hit_limit ? SolveStatus::IterationLimit : SolveStatus::Optimal;
    } else {
        result.status = hit_limit ? SolveStatus::IterationLimit : SolveStatus::Infeasible;
    }
    return result;
}

}  // namespace hetsim::lp
