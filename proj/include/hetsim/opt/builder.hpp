#pragma once

#include <cstdint>
#include <tuple>

#include "hetsim/lp/program.hpp"
#include "hetsim/lp/simplex.hpp"
#include "hetsim/net/channel.hpp"
#include "hetsim/net/scenario.hpp"

namespace hetsim::opt {

enum class Approach { WSRMax, PF, ReliabilityPF };
const char* to_string(Approach a);

/// Index bookkeeping for one built allocation program.
///
/// Variables, in declaration order:
///   x[k][n][b]   binary PRB assignment
///   t[k][n][b]   per-assignment SINR (0 when unassigned)
///   phi[...]     linearization products t * x(interferer)
///   s[k]         per-user SINR sum (PF programs only)
///   l[k]         log-SINR (users inside the logarithmic objective only)
struct AllocationVars {
    int K = 0, N = 0, B = 0;
    int x0 = 0, t0 = 0, phi0 = 0, s0 = -1;
    std::vector<int> l_index;  // per user; -1 when absent

    int knb(int k, int n, int b) const { return (k * N + n) * B + b; }
    int x(int k, int n, int b) const { return x0 + knb(k, n, b); }
    int t(int k, int n, int b) const { return t0 + knb(k, n, b); }
    /// Interferer (m, w) against victim (k, n, b); requires m != k, w != b.
    int phi(int k, int n, int b, int m, int w) const {
        const int mi = m - (m > k ? 1 : 0);
        const int wi = w - (w > b ? 1 : 0);
        return phi0 + (knb(k, n, b) * (K - 1) + mi) * (B - 1) + wi;
    }
    int s(int k) const { return s0 + k; }
};

/// Tangent of ln at `abscissa`: y = slope * s + intercept.
struct TangentLine {
    double slope = 0.0;
    double intercept = 0.0;
    double abscissa = 0.0;
};

/// Geometrically spaced tangency abscissae over [s_lo, s_hi], endpoints
/// included. Throws std::invalid_argument unless 0 < s_lo <= s_hi.
std::vector<TangentLine> make_tangent_lines(double s_lo, double s_hi, int count = 12);

/// Largest envelope-minus-ln error over [s_lo, s_hi] (attained at tangent
/// intersections).
double envelope_gap(const std::vector<TangentLine>& lines, double s_lo, double s_hi);

struct BuildResult {
    lp::MilpProgram program;
    AllocationVars vars;
    Approach approach = Approach::WSRMax;
    bool prioritized = false;
    std::vector<double> up;
    double big_m = 0.0;
    double psi = 0.0;  // 0 until add_reliability
    // PF extras
    std::vector<TangentLine> lines;
    double s_lo = 0.0, s_hi = 0.0;
    double envelope_gap_per_user = 0.0;
    double envelope_gap_total = 0.0;
    int n_log_users = 0;
    // raised when users outnumber PRBs so constraint (iii) cannot hold
    bool feasibility_warning = false;
};

/// Valid upper bound on every per-assignment SINR: 1.05 * max q / sigma
/// (interference only shrinks SINR).
double big_m_bound(const net::ChannelRealization& ch);

/// Exact SINR of an assigned (k, n, b) under a full 0/1 assignment:
/// q[k][n][b] / (sum of co-PRB interference received at b + sigma).
/// The interferer power convention is "as received at the serving BS".
/// Requires x[k][n][b] = 1 (throws std::logic_error otherwise).
double sinr_direct(const std::vector<std::uint8_t>& x, const net::ChannelRealization& ch, int k,
                   int n, int b);

/// Constraints (i) power per user, (ii) one user per PRB, (iii) at least
/// one PRB per user. Sets feasibility_warning when (iii) is hopeless.
void add_core_constraints(BuildResult& build, const net::Scenario& s);

/// The linearized SINR-defining equalities plus the big-M product rows for
/// every phi. Throws std::invalid_argument when big_m <= 0.
void add_sinr_coupling(BuildResult& build, const net::ChannelRealization& ch, double big_m);

/// Weighted SINR-sum maximization. "Before prioritization" is the same
/// program with all weights 1.
BuildResult build_wsrmax(const net::Scenario& s, const net::ChannelRealization& ch,
                         const std::vector<double>& up);

/// Proportional fairness via the tangent envelope of ln. In prioritized
/// mode the log applies to normal users only and outpatients enter the
/// objective as up[k] * s[k]. Lines must cover the attainable SINR range
/// (throws std::invalid_argument otherwise); pass make_tangent_lines(...)
/// or an empty vector to let the builder derive them.
BuildResult build_pf(const net::Scenario& s, const net::ChannelRealization& ch,
                     const std::vector<double>& up, bool prioritize,
                     std::vector<TangentLine> lines = {});

/// Hard floor s[k] >= psi for every normal user (outpatients exempt).
/// Requires a PF build; throws std::invalid_argument for psi < 0.
void add_reliability(BuildResult& build, const net::Scenario& s, double psi);

/// User priority vector: 1 for normal users; 1 + alpha * p_voting for
/// outpatients when prioritize is set, 1 otherwise.
std::vector<double> priorities(const net::Scenario& s, double alpha, bool prioritize);

struct AssignmentSolution {
    std::vector<std::tuple<int, int, int>> assignment;  // (k, n, b), sorted
    std::vector<double> sinr;                           // per user, recomputed
    std::vector<int> prbs_held;                         // per user
    double objective_value = 0.0;
    lp::SolveStatus status = lp::SolveStatus::Infeasible;
    long nodes = 0;
};

/// Reads the solved variable values back into an assignment, recomputes
/// every per-user SINR directly and cross-checks it against the solver's t
/// values (1e-6 relative). Throws ConsistencyError on fractional binaries,
/// constraint violations, or a failed cross-check.
AssignmentSolution extract_solution(const BuildResult& build, const lp::LpSolution& sol,
                                    const net::Scenario& s, const net::ChannelRealization& ch);

}  // namespace hetsim::opt
