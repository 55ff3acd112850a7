#include "hetsim/lp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <cstdio>
#include <cstdlib>

#include "simplex_internal.hpp"

namespace hetsim::lp {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::Infeasible: return "Infeasible";
        case SolveStatus::Unbounded: return "Unbounded";
        case SolveStatus::IterationLimit: return "IterationLimit";
    }
    return "?";
}

namespace detail {

namespace {
constexpr double kDropTol = 1e-11;  // FTRAN entries below this count as zero
constexpr double kRatioTol = 1e-10;  // per-pivot bound relaxation (Harris-style)
constexpr double kDjTol = 1e-9;
constexpr double kSingularTol = 1e-11;
constexpr int kRefactorInterval = 100;
}  // namespace

ScaledLp build_scaled(const MilpProgram& prog) {
    ScaledLp lp;
    lp.m = prog.num_constraints();
    lp.n_struct = prog.num_variables();
    lp.cols.resize(lp.n_struct);
    lp.obj = prog.objective();
    lp.rhs.resize(lp.m);
    lp.rel.resize(lp.m);
    lp.row_scale.assign(lp.m, 1.0);
    lp.lo.resize(lp.n_struct);
    lp.hi.resize(lp.n_struct);

    for (int j = 0; j < lp.n_struct; ++j) {
        lp.lo[j] = prog.variable(j).lower;
        lp.hi[j] = prog.variable(j).upper;
        if (prog.variable(j).kind == VarKind::Binary) lp.binaries.push_back(j);
    }

    // Row equilibration: scale every row so its largest |coefficient| is 1.
    const auto& cons = prog.constraints();
    for (int i = 0; i < lp.m; ++i) {
        double max_abs = 0.0;
        for (const auto& t : cons[i].terms) max_abs = std::max(max_abs, std::abs(t.coeff));
        const double scale = max_abs > 0.0 ? 1.0 / max_abs : 1.0;
        lp.row_scale[i] = scale;
        lp.rhs[i] = cons[i].rhs * scale;
        lp.rel[i] = cons[i].rel;
        for (const auto& t : cons[i].terms) {
            if (t.coeff != 0.0) lp.cols[t.var].emplace_back(i, t.coeff * scale);
        }
    }
    return lp;
}

double SimplexEngine::cost(int j) const {
    if (phase1_active_) return j >= lp_->n_struct + lp_->m ? -1.0 : 0.0;
    return is_struct(j) ? lp_->obj[j] : 0.0;
}

void SimplexEngine::column_into(int j, std::vector<double>& v) const {
    if (is_struct(j)) {
        for (const auto& [row, a] : lp_->cols[j]) v[row] += a;
    } else if (is_slack(j)) {
        v[slack_row(j)] += 1.0;
    } else {
        v[art_row_[art_index(j)]] += art_sign_[art_index(j)];
    }
}

double SimplexEngine::column_dot(int j, const std::vector<double>& y) const {
    if (is_struct(j)) {
        double d = 0.0;
        for (const auto& [row, a] : lp_->cols[j]) d += a * y[row];
        return d;
    }
    if (is_slack(j)) return y[slack_row(j)];
    return art_sign_[art_index(j)] * y[art_row_[art_index(j)]];
}

void SimplexEngine::ftran(std::vector<double>& v) const {
    for (const auto& e : etas_) {
        const double t = v[e.pos];
        if (t == 0.0) continue;
        v[e.pos] = t * e.inv_pivot;
        for (const auto& [row, f] : e.scatter) v[row] += f * t;
    }
}

void SimplexEngine::btran(std::vector<double>& v) const {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
        double acc = it->inv_pivot * v[it->pos];
        for (const auto& [row, f] : it->scatter) acc += f * v[row];
        v[it->pos] = acc;
    }
}

void SimplexEngine::recompute_basic_values() {
    const int m = lp_->m;
    // rf = rhs - N x_N
    std::vector<double> rf = lp_->rhs;
    for (int j = 0; j < total_cols(); ++j) {
        if (stat_[j] == VStat::Basic || value_[j] == 0.0) continue;
        if (is_struct(j)) {
            for (const auto& [row, a] : lp_->cols[j]) rf[row] -= a * value_[j];
        } else if (is_slack(j)) {
            rf[slack_row(j)] -= value_[j];
        } else {
            rf[art_row_[art_index(j)]] -= art_sign_[art_index(j)] * value_[j];
        }
    }
    ftran(rf);
    for (int i = 0; i < m; ++i) value_[basis_[i]] = rf[i];

    // One refinement pass on the full system residual.
    std::vector<double> resid = lp_->rhs;
    for (int j = 0; j < total_cols(); ++j) {
        if (value_[j] == 0.0) continue;
        if (is_struct(j)) {
            for (const auto& [row, a] : lp_->cols[j]) resid[row] -= a * value_[j];
        } else if (is_slack(j)) {
            resid[slack_row(j)] -= value_[j];
        } else {
            resid[art_row_[art_index(j)]] -= art_sign_[art_index(j)] * value_[j];
        }
    }
    ftran(resid);
    for (int i = 0; i < m; ++i) value_[basis_[i]] += resid[i];
}

bool SimplexEngine::refactorize() {
    const int m = lp_->m;
    etas_.clear();
    eta_nnz_ = 0;

    std::vector<char> row_done(m, 0);
    std::vector<int> new_basis(m, -1);
    std::vector<double> w(m, 0.0);
    bool repaired = false;

    auto pivot_column = [&](int j, int preferred_row) -> bool {
        std::fill(w.begin(), w.end(), 0.0);
        column_into(j, w);
        ftran(w);
        int pivot_row = -1;
        if (preferred_row >= 0 && !row_done[preferred_row] &&
            std::abs(w[preferred_row]) > kSingularTol) {
            pivot_row = preferred_row;
        } else {
            double best = kSingularTol;
            for (int r = 0; r < m; ++r) {
                if (!row_done[r] && std::abs(w[r]) > best) {
                    best = std::abs(w[r]);
                    pivot_row = r;
                }
            }
        }
        if (pivot_row < 0) return false;
        Eta e;
        e.pos = pivot_row;
        e.inv_pivot = 1.0 / w[pivot_row];
        for (int r = 0; r < m; ++r) {
            if (r != pivot_row && w[r] != 0.0) e.scatter.emplace_back(r, -w[r] * e.inv_pivot);
        }
        if (e.inv_pivot != 1.0 || !e.scatter.empty()) {  // identity etas are no-ops
            eta_nnz_ += e.scatter.size() + 1;
            etas_.push_back(std::move(e));
        }
        new_basis[pivot_row] = j;
        row_done[pivot_row] = 1;
        return true;
    };

    // Unit columns first: basic slacks and artificials consume their own
    // rows directly, no elimination work needed.
    std::vector<int> structural;
    for (int j : basis_) {
        if (j < 0) continue;
        if (is_struct(j)) {
            structural.push_back(j);
            continue;
        }
        const int r = is_slack(j) ? slack_row(j) : art_row_[art_index(j)];
        if (row_done[r]) {  // duplicate unit column: basis is singular here
            stat_[j] = VStat::AtLower;
            value_[j] = vlo_[j];
            repaired = true;
            continue;
        }
        const double sign = is_slack(j) ? 1.0 : art_sign_[art_index(j)];
        if (sign != 1.0) {
            Eta e;
            e.pos = r;
            e.inv_pivot = 1.0 / sign;
            eta_nnz_ += 1;
            etas_.push_back(std::move(e));
        }
        new_basis[r] = j;
        row_done[r] = 1;
    }

    // Peel row singletons: pivoting a column on a row whose remaining
    // active support is exactly that column keeps the elimination
    // triangular, which is what keeps the eta file sparse. Falling back to
    // the sparsest remaining column bounds the bump.
    std::sort(structural.begin(), structural.end());
    std::vector<int> rowcount(m, 0);
    std::vector<std::vector<int>> row_cols(m);
    std::vector<char> col_left(lp_->n_struct, 0);
    for (int j : structural) {
        col_left[j] = 1;
        for (const auto& [row, a] : lp_->cols[j]) {
            (void)a;
            if (!row_done[row]) {
                rowcount[row] += 1;
                row_cols[row].push_back(j);
            }
        }
    }
    std::vector<int> singleton_rows;
    for (int r = 0; r < m; ++r) {
        if (!row_done[r] && rowcount[r] == 1) singleton_rows.push_back(r);
    }

    std::size_t remaining = structural.size();
    auto retire_column = [&](int j) {
        col_left[j] = 0;
        --remaining;
        for (const auto& [row, a] : lp_->cols[j]) {
            (void)a;
            if (row_done[row]) continue;
            if (--rowcount[row] == 1) singleton_rows.push_back(row);
        }
    };

    while (remaining > 0) {
        int j = -1, preferred_row = -1;
        while (!singleton_rows.empty()) {
            const int r = singleton_rows.back();
            singleton_rows.pop_back();
            if (row_done[r] || rowcount[r] != 1) continue;
            for (int c : row_cols[r]) {
                if (col_left[c]) {
                    j = c;
                    preferred_row = r;
                    break;
                }
            }
            if (j >= 0) break;
        }
        if (j < 0) {
            // No singleton: take the sparsest remaining column (the bump).
            std::size_t best_nnz = ~std::size_t{0};
            for (int c = 0; c < lp_->n_struct; ++c) {
                if (col_left[c] && lp_->cols[c].size() < best_nnz) {
                    best_nnz = lp_->cols[c].size();
                    j = c;
                }
            }
            preferred_row = -1;
        }
        if (!pivot_column(j, preferred_row)) {
            // Numerically singular column: drop it to a bound; the hole is
            // patched with a pinned artificial below.
            stat_[j] = vlo_[j] > -kInfinity ? VStat::AtLower
                       : (vhi_[j] < kInfinity ? VStat::AtUpper : VStat::FreeNb);
            value_[j] = stat_[j] == VStat::AtLower
                            ? vlo_[j]
                            : (stat_[j] == VStat::AtUpper ? vhi_[j] : 0.0);
            repaired = true;
        }
        retire_column(j);
    }

    for (int r = 0; r < m; ++r) {
        if (new_basis[r] >= 0) continue;
        // A fresh pinned artificial is always independent of everything
        // pivoted so far (no eta touches an unassigned row's unit column).
        art_row_.push_back(r);
        art_sign_.push_back(1.0);
        const int j = lp_->n_struct + m + static_cast<int>(art_row_.size()) - 1;
        vlo_.push_back(0.0);
        vhi_.push_back(0.0);
        value_.push_back(0.0);
        stat_.push_back(VStat::Basic);
        new_basis[r] = j;
        repaired = true;
    }

    basis_ = std::move(new_basis);
    iters_since_refactor_ = 0;
    recompute_basic_values();
    return !repaired;
}

double SimplexEngine::primal_infeasibility() const {
    // Relative to the variable magnitude: Harris steps may leave large-scale
    // basics nominally outside their bounds by amounts that are noise at
    // their own scale.
    double worst = 0.0;
    for (int i = 0; i < lp_->m; ++i) {
        const int j = basis_[i];
        const double viol =
            std::max(vlo_[j] - value_[j], value_[j] - vhi_[j]);
        worst = std::max(worst, viol / (1.0 + std::abs(value_[j])));
    }
    return worst;
}

SolveStatus SimplexEngine::iterate(bool phase1, int refactor_interval, bool& needs_restart) {
    phase1_active_ = phase1;
    phase_iterations_ = 0;
    const int m = lp_->m;
    std::vector<double>& w = work_;

    while (true) {
        if (iterations_ >= cfg_.lp_iteration_limit) return SolveStatus::IterationLimit;
        if (iters_since_refactor_ >= refactor_interval || eta_nnz_ > 4000000) {
            if (!refactorize() && !phase1) {
                if (getenv("SXDBG")) fprintf(stderr, "[sx] repair-restart iter=%ld\n", iterations_);
                needs_restart = true;
                return SolveStatus::IterationLimit;
            }
            if (!phase1 && primal_infeasibility() > 10 * cfg_.feasibility_tol) {
                if (getenv("SXDBG")) fprintf(stderr, "[sx] drift-restart %.3e iter=%ld\n", primal_infeasibility(), iterations_);
                needs_restart = true;
                return SolveStatus::IterationLimit;
            }
        }
        const int nt = total_cols();  // repairs may append pinned artificials
        const long bland_after = 3L * (m + nt);
        const bool bland = phase_iterations_ > bland_after;

        // Duals y = c_B B^-1, then Dantzig (or Bland) pricing.
        dual_.assign(m, 0.0);
        for (int i = 0; i < m; ++i) dual_[i] = cost(basis_[i]);
        btran(dual_);

        int enter = -1;
        int enter_dir = 0;
        double best_score = 0.0;
        for (int j = 0; j < nt; ++j) {
            const VStat st = stat_[j];
            if (st == VStat::Basic) continue;
            if (vhi_[j] - vlo_[j] < 1e-30) continue;  // fixed
            const double d = cost(j) - column_dot(j, dual_);
            const double tol = kDjTol * (1.0 + std::abs(cost(j)));
            int dir = 0;
            if (st == VStat::AtLower && d > tol) dir = 1;
            else if (st == VStat::AtUpper && d < -tol) dir = -1;
            else if (st == VStat::FreeNb && std::abs(d) > tol) dir = d > 0 ? 1 : -1;
            if (dir == 0) continue;
            if (bland) {
                enter = j;
                enter_dir = dir;
                break;
            }
            const double score = std::abs(d);
            if (score > best_score) {
                best_score = score;
                enter = j;
                enter_dir = dir;
            }
        }
        if (enter < 0) return SolveStatus::Optimal;  // phase optimum

        std::fill(w.begin(), w.end(), 0.0);
        column_into(enter, w);
        ftran(w);
        // The ratio test and the value updates must agree on what counts as
        // zero, or sub-tolerance entries can walk basics out of their bounds
        // on long steps.
        for (int i = 0; i < m; ++i) {
            if (std::abs(w[i]) <= kDropTol) w[i] = 0.0;
        }

        const double span = vhi_[enter] - vlo_[enter];
        double min_limit = span;  // strict in Bland mode, relaxed otherwise
        for (int i = 0; i < m; ++i) {
            const double wi = w[i];
            if (wi == 0.0) continue;
            const int bj = basis_[i];
            const double rate = -enter_dir * wi;
            double room;
            if (rate > 0.0) {
                if (vhi_[bj] >= kInfinity) continue;
                room = vhi_[bj] - value_[bj];
            } else {
                if (vlo_[bj] <= -kInfinity) continue;
                room = value_[bj] - vlo_[bj];
            }
            room = std::max(room, 0.0);
            const double limit =
                bland ? room / std::abs(rate) : (room + kRatioTol) / std::abs(rate);
            if (limit < min_limit) min_limit = limit;
        }

        if (min_limit >= kInfinity) return SolveStatus::Unbounded;

        ++iterations_;
        ++phase_iterations_;
        ++iters_since_refactor_;

        if (span <= min_limit) {
            // The entering variable's own bound binds first: flip it without
            // a basis change.
            for (int i = 0; i < m; ++i) {
                if (w[i] != 0.0) value_[basis_[i]] -= enter_dir * span * w[i];
            }
            value_[enter] = enter_dir > 0 ? vhi_[enter] : vlo_[enter];
            stat_[enter] = enter_dir > 0 ? VStat::AtUpper : VStat::AtLower;
            continue;
        }

        // Leaving choice among rows whose strict limit fits under min_limit:
        // largest |pivot| for stability, lowest variable index under Bland.
        int leave_row = -1;
        double best_pivot = 0.0;
        double step = 0.0;
        for (int i = 0; i < m; ++i) {
            const double wi = w[i];
            if (wi == 0.0) continue;
            const int bj = basis_[i];
            const double rate = -enter_dir * wi;
            double room;
            if (rate > 0.0) {
                if (vhi_[bj] >= kInfinity) continue;
                room = vhi_[bj] - value_[bj];
            } else {
                if (vlo_[bj] <= -kInfinity) continue;
                room = value_[bj] - vlo_[bj];
            }
            room = std::max(room, 0.0);
            const double strict = room / std::abs(rate);
            if (strict > min_limit) continue;
            if (bland) {
                if (leave_row < 0 || bj < basis_[leave_row]) {
                    leave_row = i;
                    step = strict;
                }
            } else if (std::abs(wi) > best_pivot) {
                best_pivot = std::abs(wi);
                leave_row = i;
                step = strict;
            }
        }
        if (leave_row < 0) {
            // Unreachable with a finite min_limit < span; defensive only.
            if (getenv("SXDBG")) fprintf(stderr, "[sx] no-leave-restart iter=%ld\n", iterations_);
            needs_restart = true;
            return SolveStatus::IterationLimit;
        }

        for (int i = 0; i < m; ++i) {
            if (w[i] != 0.0) value_[basis_[i]] -= enter_dir * step * w[i];
        }
        const double from = stat_[enter] == VStat::AtLower
                                ? vlo_[enter]
                                : (stat_[enter] == VStat::AtUpper ? vhi_[enter] : value_[enter]);
        value_[enter] = from + enter_dir * step;

        const int leaving = basis_[leave_row];
        const double rate = -enter_dir * w[leave_row];
        // Keep the exact post-step value rather than snapping to the bound:
        // a snap would perturb the system solution and the perturbation gets
        // amplified through ill-conditioned bases at the next recompute. Any
        // residual bound overshoot is bounded by the ratio-test relaxation.
        stat_[leaving] = rate > 0.0 ? VStat::AtUpper : VStat::AtLower;
        stat_[enter] = VStat::Basic;
        basis_[leave_row] = enter;

        Eta e;
        e.pos = leave_row;
        e.inv_pivot = 1.0 / w[leave_row];
        for (int i = 0; i < m; ++i) {
            if (i != leave_row && w[i] != 0.0) e.scatter.emplace_back(i, -w[i] * e.inv_pivot);
        }
        eta_nnz_ += e.scatter.size() + 1;
        etas_.push_back(std::move(e));
    }
}

SolveStatus SimplexEngine::attempt(const std::vector<double>& lo, const std::vector<double>& hi,
                                   int refactor_interval, bool& needs_restart) {
    const int m = lp_->m;
    const int n = lp_->n_struct;
    needs_restart = false;

    art_row_.clear();
    art_sign_.clear();
    etas_.clear();
    eta_nnz_ = 0;
    iterations_ = 0;
    iters_since_refactor_ = 0;

    const int base_cols = n + m;
    vlo_.assign(base_cols, 0.0);
    vhi_.assign(base_cols, 0.0);
    for (int j = 0; j < n; ++j) {
        vlo_[j] = lo[j];
        vhi_[j] = hi[j];
    }
    for (int i = 0; i < m; ++i) {
        switch (lp_->rel[i]) {
            case Relation::LessEq:
                vlo_[n + i] = 0.0;
                vhi_[n + i] = kInfinity;
                break;
            case Relation::Equal:
                vlo_[n + i] = 0.0;
                vhi_[n + i] = 0.0;
                break;
            case Relation::GreaterEq:
                vlo_[n + i] = -kInfinity;
                vhi_[n + i] = 0.0;
                break;
        }
    }

    value_.assign(base_cols, 0.0);
    stat_.assign(base_cols, VStat::AtLower);
    for (int j = 0; j < n; ++j) {
        if (vlo_[j] > -kInfinity) {
            stat_[j] = VStat::AtLower;
            value_[j] = vlo_[j];
        } else if (vhi_[j] < kInfinity) {
            stat_[j] = VStat::AtUpper;
            value_[j] = vhi_[j];
        } else {
            stat_[j] = VStat::FreeNb;
            value_[j] = 0.0;
        }
    }

    // The row activity at the nonbasic point decides which slacks can start
    // basic and which rows need an artificial.
    std::vector<double> act(m, 0.0);
    for (int j = 0; j < n; ++j) {
        if (value_[j] == 0.0) continue;
        for (const auto& [row, a] : lp_->cols[j]) act[row] += a * value_[j];
    }

    basis_.assign(m, -1);
    work_.assign(m, 0.0);
    dual_.assign(m, 0.0);

    std::vector<std::pair<int, double>> artificials;  // (row, residual sign)
    for (int i = 0; i < m; ++i) {
        const int sj = n + i;
        const double s_free = lp_->rhs[i] - act[i];
        if (s_free >= vlo_[sj] && s_free <= vhi_[sj]) {
            basis_[i] = sj;
            stat_[sj] = VStat::Basic;
            value_[sj] = s_free;
        } else {
            const double clamped = std::clamp(s_free, vlo_[sj], vhi_[sj]);
            stat_[sj] = clamped == vlo_[sj] ? VStat::AtLower : VStat::AtUpper;
            value_[sj] = clamped;
            artificials.emplace_back(i, s_free - clamped > 0 ? 1.0 : -1.0);
        }
    }

    for (const auto& [row, sign] : artificials) {
        art_row_.push_back(row);
        art_sign_.push_back(sign);
    }
    const int nt = total_cols();
    vlo_.resize(nt, 0.0);
    vhi_.resize(nt, kInfinity);
    value_.resize(nt, 0.0);
    stat_.resize(nt, VStat::AtLower);
    for (std::size_t a = 0; a < art_row_.size(); ++a) {
        const int j = base_cols + static_cast<int>(a);
        const int row = art_row_[a];
        basis_[row] = j;
        stat_[j] = VStat::Basic;
        const double s_free = lp_->rhs[row] - act[row];
        value_[j] = std::abs(s_free - value_[n + row]);
    }

    if (!art_row_.empty()) {
        // Negative-sign artificial columns make the starting basis differ
        // from the identity; factorize it before iterating.
        refactorize();
        const SolveStatus st = iterate(/*phase1=*/true, refactor_interval, needs_restart);
        if (needs_restart) return SolveStatus::IterationLimit;
        if (st == SolveStatus::IterationLimit) return st;
        if (st == SolveStatus::Unbounded) {
            if (getenv("SXDBG")) fprintf(stderr, "[sx] phase1-unbounded\n");
            needs_restart = true;
            return SolveStatus::IterationLimit;
        }
        double art_sum = 0.0;
        for (std::size_t a = 0; a < art_row_.size(); ++a) {
            art_sum += value_[base_cols + static_cast<int>(a)];
        }
        double rhs_scale = 0.0;
        for (int i = 0; i < m; ++i) rhs_scale = std::max(rhs_scale, std::abs(lp_->rhs[i]));
        if (art_sum > cfg_.feasibility_tol * 10.0 * (1.0 + rhs_scale)) {
            return SolveStatus::Infeasible;
        }
        // Pin the artificials at zero for phase 2.
        for (std::size_t a = 0; a < art_row_.size(); ++a) {
            const int j = base_cols + static_cast<int>(a);
            vlo_[j] = 0.0;
            vhi_[j] = 0.0;
            if (stat_[j] != VStat::Basic) value_[j] = 0.0;
        }
    }

    const SolveStatus st = iterate(/*phase1=*/false, refactor_interval, needs_restart);
    if (needs_restart) return SolveStatus::IterationLimit;
    if (st != SolveStatus::Optimal) return st;

    finalize();
    if (primal_infeasibility() > 10 * cfg_.feasibility_tol) {
        if (getenv("SXDBG")) fprintf(stderr, "[sx] finalize-restart %.3e\n", primal_infeasibility());
        needs_restart = true;
        return SolveStatus::IterationLimit;
    }
    return SolveStatus::Optimal;
}

void SimplexEngine::finalize() {
    // Fresh factorization and refined values before reporting.
    refactorize();
    result_values_.assign(lp_->n_struct, 0.0);
    for (int j = 0; j < lp_->n_struct; ++j) {
        result_values_[j] = std::clamp(value_[j], vlo_[j], vhi_[j]);
    }
    objective_ = 0.0;
    for (int j = 0; j < lp_->n_struct; ++j) objective_ += lp_->obj[j] * result_values_[j];
}

SolveStatus SimplexEngine::solve(const std::vector<double>& lo, const std::vector<double>& hi) {
    bool needs_restart = false;
    SolveStatus st = attempt(lo, hi, kRefactorInterval, needs_restart);
    if (needs_restart) {
        // Numerical drift: retry once with tighter refactorization.
        st = attempt(lo, hi, 20, needs_restart);
        if (needs_restart) return SolveStatus::IterationLimit;
    }
    return st;
}

}  // namespace detail

LpSolution solve_lp(const MilpProgram& prog, const SolverConfig& cfg) {
    const detail::ScaledLp lp = detail::build_scaled(prog);
    detail::SimplexEngine engine(lp, cfg);
    LpSolution sol;
    sol.status = engine.solve(lp.lo, lp.hi);
    sol.iterations = engine.iterations();
    if (sol.status == SolveStatus::Optimal) {
        sol.values = engine.structural_values();
        sol.objective = engine.objective();
    }
    return sol;
}

AuditResult audit_solution(const MilpProgram& prog, const std::vector<double>& values) {
    AuditResult r;
    for (int j = 0; j < prog.num_variables(); ++j) {
        const auto& v = prog.variable(j);
        r.max_bound_violation = std::max(r.max_bound_violation, v.lower - values[j]);
        r.max_bound_violation = std::max(r.max_bound_violation, values[j] - v.upper);
    }
    for (const auto& c : prog.constraints()) {
        double act = 0.0;
        for (const auto& t : c.terms) act += t.coeff * values[t.var];
        double viol = 0.0;
        switch (c.rel) {
            case Relation::LessEq: viol = act - c.rhs; break;
            case Relation::Equal: viol = std::abs(act - c.rhs); break;
            case Relation::GreaterEq: viol = c.rhs - act; break;
        }
        r.max_row_violation = std::max(r.max_row_violation, viol);
    }
    return r;
}

std::string solution_lines(const MilpProgram& prog, const LpSolution& sol) {
    std::string out;
    out += "status=" + std::string(to_string(sol.status)) + "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "objective=%.12g\n", sol.objective);
    out += buf;
    if (!sol.values.empty()) {
        for (int j = 0; j < prog.num_variables(); ++j) {
            std::snprintf(buf, sizeof(buf), "=%.12g\n", sol.values[j]);
            out += prog.variable(j).name + buf;
        }
    }
    return out;
}

}  // namespace hetsim::lp
