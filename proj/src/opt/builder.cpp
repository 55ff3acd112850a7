#include "hetsim/opt/builder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hetsim/errors.hpp"
#include "hetsim/ml/ensemble.hpp"

namespace hetsim::opt {

const char* to_string(Approach a) {
    switch (a) {
        case Approach::WSRMax: return "wsrmax";
        case Approach::PF: return "pf";
        case Approach::ReliabilityPF: return "pf-rel";
    }
    return "?";
}

double big_m_bound(const net::ChannelRealization& ch) {
    double max_q = 0.0;
    for (double q : ch.q_mw) max_q = std::max(max_q, q);
    return 1.05 * max_q / ch.noise_mw_per_prb;
}

double sinr_direct(const std::vector<std::uint8_t>& x, const net::ChannelRealization& ch, int k,
                   int n, int b) {
    if (!x[ch.knb(k, n, b)]) throw std::logic_error("sinr_direct: (k,n,b) is not assigned");
    double interference = 0.0;
    for (int w = 0; w < ch.n_bs; ++w) {
        if (w == b) continue;
        for (int m = 0; m < ch.n_users; ++m) {
            if (m == k) continue;
            if (x[ch.knb(m, n, w)]) interference += ch.q(m, n, b);
        }
    }
    return ch.q(k, n, b) / (interference + ch.noise_mw_per_prb);
}

namespace {

std::string idx3(const char* stem, int k, int n, int b) {
    return std::string(stem) + "_" + std::to_string(k) + "_" + std::to_string(n) + "_" +
           std::to_string(b);
}

void add_assignment_variables(BuildResult& build, const net::Scenario& s,
                              const net::ChannelRealization& ch) {
    auto& vars = build.vars;
    auto& prog = build.program;
    vars.K = s.num_users();
    vars.N = s.prbs_per_bs;
    vars.B = s.num_bs();

    vars.x0 = prog.num_variables();
    for (int k = 0; k < vars.K; ++k)
        for (int n = 0; n < vars.N; ++n)
            for (int b = 0; b < vars.B; ++b) prog.add_binary(idx3("x", k, n, b));

    vars.t0 = prog.num_variables();
    for (int k = 0; k < vars.K; ++k)
        for (int n = 0; n < vars.N; ++n)
            for (int b = 0; b < vars.B; ++b) {
                // t <= q/sigma: interference can only lower the SINR.
                prog.add_continuous(idx3("t", k, n, b), 0.0,
                                    ch.q(k, n, b) / ch.noise_mw_per_prb);
            }

    vars.phi0 = prog.num_variables();
    for (int k = 0; k < vars.K; ++k)
        for (int n = 0; n < vars.N; ++n)
            for (int b = 0; b < vars.B; ++b)
                for (int m = 0; m < vars.K; ++m) {
                    if (m == k) continue;
                    for (int w = 0; w < vars.B; ++w) {
                        if (w == b) continue;
                        prog.add_continuous(idx3("phi", k, n, b) + "_" + std::to_string(m) + "_" +
                                                std::to_string(w),
                                            0.0, ch.q(k, n, b) / ch.noise_mw_per_prb);
                    }
                }
}

}  // namespace

void add_core_constraints(BuildResult& build, const net::Scenario& s) {
    auto& prog = build.program;
    const auto& vars = build.vars;
    const double p = s.tx_power_per_prb_mw;
    const double pm = s.max_power_per_connection_mw;

    for (int k = 0; k < vars.K; ++k) {
        std::vector<lp::Term> terms;
        for (int n = 0; n < vars.N; ++n)
            for (int b = 0; b < vars.B; ++b) terms.push_back({vars.x(k, n, b), p});
        prog.add_constraint("pow_" + std::to_string(k), std::move(terms), lp::Relation::LessEq, pm);
    }
    for (int n = 0; n < vars.N; ++n) {
        for (int b = 0; b < vars.B; ++b) {
            std::vector<lp::Term> terms;
            for (int k = 0; k < vars.K; ++k) terms.push_back({vars.x(k, n, b), 1.0});
            prog.add_constraint("cap_" + std::to_string(n) + "_" + std::to_string(b),
                                std::move(terms), lp::Relation::LessEq, 1.0);
        }
    }
    for (int k = 0; k < vars.K; ++k) {
        std::vector<lp::Term> terms;
        for (int n = 0; n < vars.N; ++n)
            for (int b = 0; b < vars.B; ++b) terms.push_back({vars.x(k, n, b), 1.0});
        prog.add_constraint("serve_" + std::to_string(k), std::move(terms),
                            lp::Relation::GreaterEq, 1.0);
    }
    if (vars.K > vars.N * vars.B) build.feasibility_warning = true;
}

void add_sinr_coupling(BuildResult& build, const net::ChannelRealization& ch, double big_m) {
    if (!(big_m > 0.0)) throw std::invalid_argument("add_sinr_coupling: big_m must be positive");
    auto& prog = build.program;
    const auto& vars = build.vars;
    const double sigma = ch.noise_mw_per_prb;

    for (int k = 0; k < vars.K; ++k) {
        for (int n = 0; n < vars.N; ++n) {
            for (int b = 0; b < vars.B; ++b) {
                // sigma * t + sum q_mb * phi - q_kb * x = 0 pins t to the
                // exact SINR once the binaries are integral.
                std::vector<lp::Term> eq;
                eq.push_back({vars.t(k, n, b), sigma});
                for (int m = 0; m < vars.K; ++m) {
                    if (m == k) continue;
                    for (int w = 0; w < vars.B; ++w) {
                        if (w == b) continue;
                        eq.push_back({vars.phi(k, n, b, m, w), ch.q(m, n, b)});
                    }
                }
                eq.push_back({vars.x(k, n, b), -ch.q(k, n, b)});
                prog.add_constraint(idx3("cpl", k, n, b), std::move(eq), lp::Relation::Equal, 0.0);

                // Product rows phi = t * x(m, n, w). The per-victim bound
                // min(big_m, 1.05 q/sigma) is still valid for t and keeps
                // the relaxation much tighter than the global constant.
                const double m_v = std::min(big_m, 1.05 * ch.q(k, n, b) / sigma);
                for (int m = 0; m < vars.K; ++m) {
                    if (m == k) continue;
                    for (int w = 0; w < vars.B; ++w) {
                        if (w == b) continue;
                        const int phi = vars.phi(k, n, b, m, w);
                        const int xmw = vars.x(m, n, w);
                        const int tkb = vars.t(k, n, b);
                        const std::string tag = "_" + std::to_string(m) + "_" + std::to_string(w);
                        prog.add_constraint(idx3("phx", k, n, b) + tag,
                                            {{phi, 1.0}, {xmw, -m_v}}, lp::Relation::LessEq, 0.0);
                        prog.add_constraint(idx3("pht", k, n, b) + tag, {{phi, 1.0}, {tkb, -1.0}},
                                            lp::Relation::LessEq, 0.0);
                        prog.add_constraint(idx3("phl", k, n, b) + tag,
                                            {{phi, 1.0}, {tkb, -1.0}, {xmw, -m_v}},
                                            lp::Relation::GreaterEq, -m_v);
                    }
                }
            }
        }
    }
}

namespace {

BuildResult start_build(const net::Scenario& s, const net::ChannelRealization& ch,
                        const std::vector<double>& up, Approach approach, bool prioritized) {
    if (static_cast<int>(up.size()) != s.num_users()) {
        throw std::invalid_argument("priority vector size must match the user count");
    }
    for (double u : up) {
        if (!(u >= 1.0)) throw std::invalid_argument("priorities must be >= 1");
    }
    BuildResult build;
    build.approach = approach;
    build.prioritized = prioritized;
    build.up = up;
    build.big_m = big_m_bound(ch);
    add_assignment_variables(build, s, ch);
    add_core_constraints(build, s);
    add_sinr_coupling(build, ch, build.big_m);
    return build;
}

/// Worst-case-interference floor on any assigned PRB's SINR; every served
/// user's SINR sum is at least this.
double sinr_floor(const net::ChannelRealization& ch) {
    double floor_v = std::numeric_limits<double>::infinity();
    for (int k = 0; k < ch.n_users; ++k) {
        for (int n = 0; n < ch.n_prbs; ++n) {
            for (int b = 0; b < ch.n_bs; ++b) {
                double denom = ch.noise_mw_per_prb;
                for (int m = 0; m < ch.n_users; ++m) {
                    if (m != k) denom += (ch.n_bs - 1) * ch.q(m, n, b);
                }
                floor_v = std::min(floor_v, ch.q(k, n, b) / denom);
            }
        }
    }
    return floor_v;
}

/// Largest binary-feasible SINR sum of any single user: top-cap assignment
/// of its own best PRBs, no interference.
double sinr_ceiling(const net::Scenario& s, const net::ChannelRealization& ch) {
    const int cap = std::min(s.max_prbs_per_user(), ch.n_prbs * ch.n_bs);
    double best = 0.0;
    for (int k = 0; k < ch.n_users; ++k) {
        std::vector<double> snr;
        for (int n = 0; n < ch.n_prbs; ++n)
            for (int b = 0; b < ch.n_bs; ++b) snr.push_back(ch.q(k, n, b) / ch.noise_mw_per_prb);
        std::sort(snr.begin(), snr.end(), std::greater<>());
        double sum = 0.0;
        for (int i = 0; i < cap; ++i) sum += snr[i];
        best = std::max(best, sum);
    }
    return best;
}

/// LP-valid upper bound on s[k]: fractional knapsack of the user's SNRs
/// under the power budget (the relaxation may hold PM/P fractional PRBs).
double s_upper_bound(const net::Scenario& s, const net::ChannelRealization& ch, int k) {
    std::vector<double> snr;
    for (int n = 0; n < ch.n_prbs; ++n)
        for (int b = 0; b < ch.n_bs; ++b) snr.push_back(ch.q(k, n, b) / ch.noise_mw_per_prb);
    std::sort(snr.begin(), snr.end(), std::greater<>());
    double budget = s.max_power_per_connection_mw / s.tx_power_per_prb_mw;
    double sum = 0.0;
    for (double v : snr) {
        const double take = std::min(budget, 1.0);
        if (take <= 0.0) break;
        sum += take * v;
        budget -= take;
    }
    return sum;
}

}  // namespace

std::vector<TangentLine> make_tangent_lines(double s_lo, double s_hi, int count) {
    if (!(s_lo > 0.0) || !(s_hi >= s_lo) || count < 1) {
        throw std::invalid_argument("make_tangent_lines: need 0 < s_lo <= s_hi and count >= 1");
    }
    std::vector<TangentLine> lines;
    const int n = (s_hi == s_lo) ? 1 : count;
    for (int j = 0; j < n; ++j) {
        const double frac = n == 1 ? 0.0 : static_cast<double>(j) / (n - 1);
        const double a = s_lo * std::pow(s_hi / s_lo, frac);
        lines.push_back({1.0 / a, std::log(a) - 1.0, a});
    }
    return lines;
}

double envelope_gap(const std::vector<TangentLine>& lines, double s_lo, double s_hi) {
    auto envelope = [&](double s) {
        double v = std::numeric_limits<double>::infinity();
        for (const auto& ln : lines) v = std::min(v, ln.slope * s + ln.intercept);
        return v;
    };
    double gap = std::max(envelope(s_lo) - std::log(s_lo), envelope(s_hi) - std::log(s_hi));
    // The maximum lives at intersections of envelope-adjacent tangents.
    std::vector<TangentLine> sorted = lines;
    std::sort(sorted.begin(), sorted.end(),
              [](const TangentLine& a, const TangentLine& b) { return a.abscissa < b.abscissa; });
    for (std::size_t j = 0; j + 1 < sorted.size(); ++j) {
        const auto& l1 = sorted[j];
        const auto& l2 = sorted[j + 1];
        if (l1.slope == l2.slope) continue;
        const double s_star = (l2.intercept - l1.intercept) / (l1.slope - l2.slope);
        if (s_star < s_lo || s_star > s_hi) continue;
        gap = std::max(gap, l1.slope * s_star + l1.intercept - std::log(s_star));
    }
    return gap;
}

BuildResult build_wsrmax(const net::Scenario& s, const net::ChannelRealization& ch,
                         const std::vector<double>& up) {
    BuildResult build = start_build(s, ch, up, Approach::WSRMax, false);
    for (int k = 0; k < build.vars.K; ++k) {
        for (int n = 0; n < build.vars.N; ++n) {
            for (int b = 0; b < build.vars.B; ++b) {
                build.program.set_objective(build.vars.t(k, n, b), up[k]);
            }
        }
    }
    return build;
}

BuildResult build_pf(const net::Scenario& s, const net::ChannelRealization& ch,
                     const std::vector<double>& up, bool prioritize,
                     std::vector<TangentLine> lines) {
    BuildResult build = start_build(s, ch, up, Approach::PF, prioritize);
    auto& prog = build.program;
    auto& vars = build.vars;

    build.s_lo = sinr_floor(ch);
    build.s_hi = sinr_ceiling(s, ch);
    if (lines.empty()) lines = make_tangent_lines(build.s_lo, build.s_hi);
    double a_min = std::numeric_limits<double>::infinity(), a_max = 0.0;
    for (const auto& ln : lines) {
        a_min = std::min(a_min, ln.abscissa);
        a_max = std::max(a_max, ln.abscissa);
    }
    if (a_min > build.s_lo * (1.0 + 1e-9) || a_max < build.s_hi * (1.0 - 1e-9)) {
        throw std::invalid_argument(
            "build_pf: tangent lines do not cover the attainable SINR interval");
    }
    build.lines = lines;
    build.envelope_gap_per_user = envelope_gap(lines, build.s_lo, build.s_hi);

    vars.s0 = prog.num_variables();
    for (int k = 0; k < vars.K; ++k) {
        prog.add_continuous("s_" + std::to_string(k), 0.0, s_upper_bound(s, ch, k));
    }
    for (int k = 0; k < vars.K; ++k) {
        std::vector<lp::Term> terms{{vars.s(k), 1.0}};
        for (int n = 0; n < vars.N; ++n)
            for (int b = 0; b < vars.B; ++b) terms.push_back({vars.t(k, n, b), -1.0});
        prog.add_constraint("slink_" + std::to_string(k), std::move(terms), lp::Relation::Equal,
                            0.0);
    }

    vars.l_index.assign(vars.K, -1);
    const double l_lower = std::log(build.s_lo) - 2.0;
    for (int k = 0; k < vars.K; ++k) {
        const bool in_log = !prioritize || !s.is_outpatient(k);
        if (!in_log) continue;
        vars.l_index[k] = prog.add_continuous("l_" + std::to_string(k), l_lower, lp::kInfinity);
        ++build.n_log_users;
        int j = 0;
        for (const auto& ln : lines) {
            prog.add_constraint("tan_" + std::to_string(k) + "_" + std::to_string(j++),
                                {{vars.l_index[k], 1.0}, {vars.s(k), -ln.slope}},
                                lp::Relation::LessEq, ln.intercept);
        }
    }
    build.envelope_gap_total = build.envelope_gap_per_user * build.n_log_users;

    for (int k = 0; k < vars.K; ++k) {
        if (vars.l_index[k] >= 0) {
            prog.set_objective(vars.l_index[k], 1.0);
        } else {
            prog.set_objective(vars.s(k), up[k]);  // prioritized outpatients
        }
    }
    return build;
}

void add_reliability(BuildResult& build, const net::Scenario& s, double psi) {
    if (psi < 0.0) throw std::invalid_argument("add_reliability: psi must be >= 0");
    if (build.vars.s0 < 0) {
        throw std::invalid_argument("add_reliability: requires a PF build (no s variables)");
    }
    build.approach = Approach::ReliabilityPF;
    build.psi = psi;
    for (int k = 0; k < build.vars.K; ++k) {
        if (s.is_outpatient(k)) continue;
        build.program.add_constraint("rel_" + std::to_string(k), {{build.vars.s(k), 1.0}},
                                     lp::Relation::GreaterEq, psi);
    }
}

std::vector<double> priorities(const net::Scenario& s, double alpha, bool prioritize) {
    if (alpha < 0.0) throw std::invalid_argument("priorities: alpha must be >= 0");
    std::vector<double> up(s.num_users(), 1.0);
    if (!prioritize) return up;
    for (int k = 0; k < s.num_users(); ++k) {
        const auto& u = s.users[k];
        if (u.kind == net::UserKind::Outpatient) {
            up[k] = ml::priority(s.op_voting.at(u.op_index), alpha, true);
        }
    }
    return up;
}

AssignmentSolution extract_solution(const BuildResult& build, const lp::LpSolution& sol,
                                    const net::Scenario& s, const net::ChannelRealization& ch) {
    AssignmentSolution out;
    out.status = sol.status;
    out.nodes = sol.nodes;
    if (sol.status != lp::SolveStatus::Optimal) return out;

    const auto& vars = build.vars;
    std::vector<std::uint8_t> x(static_cast<std::size_t>(vars.K) * vars.N * vars.B, 0);
    for (int k = 0; k < vars.K; ++k) {
        for (int n = 0; n < vars.N; ++n) {
            for (int b = 0; b < vars.B; ++b) {
                const double v = sol.values[vars.x(k, n, b)];
                if (std::abs(v - std::round(v)) > 1e-6) {
                    throw ConsistencyError("extract_solution: fractional binary x at optimum");
                }
                x[vars.knb(k, n, b)] = std::round(v) > 0.5 ? 1 : 0;
            }
        }
    }

    out.sinr.assign(vars.K, 0.0);
    out.prbs_held.assign(vars.K, 0);
    for (int n = 0; n < vars.N; ++n) {
        for (int b = 0; b < vars.B; ++b) {
            int holders = 0;
            for (int k = 0; k < vars.K; ++k) holders += x[vars.knb(k, n, b)];
            if (holders > 1) throw ConsistencyError("extract_solution: PRB assigned twice");
        }
    }
    const int cap = s.max_prbs_per_user();
    for (int k = 0; k < vars.K; ++k) {
        double s_solver = 0.0;
        for (int n = 0; n < vars.N; ++n) {
            for (int b = 0; b < vars.B; ++b) {
                s_solver += sol.values[vars.t(k, n, b)];
                if (x[vars.knb(k, n, b)]) {
                    out.assignment.emplace_back(k, n, b);
                    out.prbs_held[k] += 1;
                    out.sinr[k] += sinr_direct(x, ch, k, n, b);
                }
            }
        }
        if (out.prbs_held[k] < 1) throw ConsistencyError("extract_solution: unserved user");
        if (out.prbs_held[k] > cap) throw ConsistencyError("extract_solution: power cap exceeded");
        if (out.prbs_held[k] * s.tx_power_per_prb_mw >
            s.max_power_per_connection_mw + 1e-9) {
            throw ConsistencyError("extract_solution: per-user power above PM");
        }
        const double denom = std::max({std::abs(out.sinr[k]), std::abs(s_solver), 1e-12});
        if (std::abs(out.sinr[k] - s_solver) / denom > 1e-6) {
            throw ConsistencyError("extract_solution: solver SINR deviates from direct recomputation");
        }
    }
    out.objective_value = sol.objective;
    return out;
}

}  // namespace hetsim::opt
