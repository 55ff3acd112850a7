#pragma once

#include "hetsim/lp/program.hpp"

namespace hetsim::lp {

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

const char* to_string(SolveStatus s);

/// All solver tolerances in one place.
struct SolverConfig {
    double feasibility_tol = 1e-7;  // absolute, on constraint rows and bounds
    double integrality_tol = 1e-6;  // binary counted integral within this
    double relative_gap = 1e-6;     // branch & bound optimality proof
    long node_limit = 200000;
    long lp_iteration_limit = 500000;  // per LP solve
};

struct LpSolution {
    std::vector<double> values;  // per declared variable; empty when infeasible
    double objective = 0.0;
    SolveStatus status = SolveStatus::Infeasible;
    long iterations = 0;   // simplex pivots (summed over nodes for MILPs)
    long nodes = 0;        // branch & bound nodes solved (0 for plain LPs)
    double root_bound = 0.0;  // root relaxation objective (MILPs only)
};

/// Primal simplex on the LP relaxation (binaries relaxed to [0, 1]).
/// Dantzig pricing with a switch to Bland's rule after 3*(rows+cols)
/// iterations; deterministic for identical inputs.
LpSolution solve_lp(const MilpProgram& prog, const SolverConfig& cfg = {});

/// Best-first branch & bound over the binary variables: branches on the
/// most-fractional binary (ties to the lowest index), proves optimality to
/// the configured relative gap, and returns the incumbent with
/// IterationLimit when the node limit is hit.
LpSolution solve_milp(const MilpProgram& prog, const SolverConfig& cfg = {});

/// Post-hoc feasibility audit in original (unscaled) units.
struct AuditResult {
    double max_bound_violation = 0.0;
    double max_row_violation = 0.0;
    bool ok(double tol) const { return max_bound_violation <= tol && max_row_violation <= tol; }
};

AuditResult audit_solution(const MilpProgram& prog, const std::vector<double>& values);

/// Debug dump: one "name=value" line per variable.
std::string solution_lines(const MilpProgram& prog, const LpSolution& sol);

}  // namespace hetsim::lp
