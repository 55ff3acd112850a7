#pragma once

// Revised bounded-variable primal simplex shared by solve_lp and the branch
// & bound driver. The basis inverse is kept in product form (eta file) and
// rebuilt from scratch every kRefactorInterval pivots; refactorization also
// recomputes the basic values with one step of iterative refinement, which
// is what keeps the final residuals inside the 1e-7 audit tolerance.

#include <utility>
#include <vector>

#include "hetsim/lp/program.hpp"
#include "hetsim/lp/simplex.hpp"

namespace hetsim::lp::detail {

struct ScaledLp {
    int m = 0;         // rows
    int n_struct = 0;  // structural columns
    std::vector<std::vector<std::pair<int, double>>> cols;  // row-scaled structural columns
    std::vector<double> obj;                                // structural objective
    std::vector<double> rhs;                                // scaled right-hand sides
    std::vector<Relation> rel;
    std::vector<double> row_scale;  // multiplier applied to each row
    std::vector<double> lo, hi;     // structural bounds from the program
    std::vector<int> binaries;
};

ScaledLp build_scaled(const MilpProgram& prog);

class SimplexEngine {
public:
    SimplexEngine(const ScaledLp& lp, const SolverConfig& cfg) : lp_(&lp), cfg_(cfg) {}

    /// Solves with the given structural bounds (callers override binary
    /// bounds for branch & bound nodes). Reusable across calls.
    SolveStatus solve(const std::vector<double>& lo, const std::vector<double>& hi);

    const std::vector<double>& structural_values() const { return result_values_; }
    double objective() const { return objective_; }
    long iterations() const { return iterations_; }

private:
    enum class VStat : unsigned char { Basic, AtLower, AtUpper, FreeNb };
    struct Eta {
        int pos;
        double inv_pivot;
        std::vector<std::pair<int, double>> scatter;  // (row, factor)
    };

    int total_cols() const { return lp_->n_struct + lp_->m + static_cast<int>(art_row_.size()); }
    bool is_struct(int j) const { return j < lp_->n_struct; }
    bool is_slack(int j) const { return j >= lp_->n_struct && j < lp_->n_struct + lp_->m; }
    int slack_row(int j) const { return j - lp_->n_struct; }
    int art_index(int j) const { return j - lp_->n_struct - lp_->m; }

    double cost(int j) const;
    void ftran(std::vector<double>& v) const;
    void btran(std::vector<double>& v) const;
    void column_into(int j, std::vector<double>& v) const;  // scatters column j
    double column_dot(int j, const std::vector<double>& y) const;

    SolveStatus attempt(const std::vector<double>& lo, const std::vector<double>& hi,
                        int refactor_interval, bool& needs_restart);
    SolveStatus iterate(bool phase1, int refactor_interval, bool& needs_restart);
    bool refactorize();               // false on repair (basis was patched)
    void recompute_basic_values();    // fresh values + one refinement pass
    double primal_infeasibility() const;
    void finalize();

    const ScaledLp* lp_;
    SolverConfig cfg_;

    std::vector<double> vlo_, vhi_, value_;
    std::vector<VStat> stat_;
    std::vector<int> basis_;          // var index per row position
    std::vector<int> art_row_;        // artificial -> row
    std::vector<double> art_sign_;
    std::vector<Eta> etas_;
    std::size_t eta_nnz_ = 0;
    bool phase1_active_ = false;
    long iterations_ = 0;
    long phase_iterations_ = 0;
    long iters_since_refactor_ = 0;

    std::vector<double> work_, dual_;   // dense m-vectors
    std::vector<double> result_values_;
    double objective_ = 0.0;
};

}  // namespace hetsim::lp::detail
