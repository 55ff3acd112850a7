#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hetsim/errors.hpp"
#include "hetsim/opt/builder.hpp"
#include "test_helpers.hpp"

using namespace hetsim;
using namespace hetsim::opt;
using testutil::manual_channel;
using testutil::toy_config;

namespace {

/// 1 user, 1 PRB, 1 BS with a chosen q/sigma.
net::Scenario micro_scenario(int n_users = 1, int n_bs = 1, int n_prbs = 1) {
    net::Scenario s;
    for (int b = 0; b < n_bs; ++b) {
        s.base_stations.push_back({b, b == 0 ? net::BsKind::Macro : net::BsKind::Pico,
                                   400.0 * b, 0.0});
    }
    for (int k = 0; k < n_users; ++k) {
        s.users.push_back({k + 1, net::UserKind::Normal, -1, 100.0 + 10.0 * k, 50.0});
    }
    s.prbs_per_bs = n_prbs;
    s.tx_power_per_prb_mw = net::dbm_to_mw(17.0);
    s.max_power_per_connection_mw = net::dbm_to_mw(23.0);
    s.noise_density_dbm_hz = -162.0;
    s.prb_bandwidth_hz = 180e3;
    return s;
}

}  // namespace

TEST_CASE("sinr_direct: single user sees q over sigma") {
    const net::Scenario s = micro_scenario();
    const double sigma = 2e-11;
    const net::ChannelRealization ch = manual_channel(s, {8e-10}, sigma);
    std::vector<std::uint8_t> x = {1};
    CHECK(sinr_direct(x, ch, 0, 0, 0) == doctest::Approx(8e-10 / sigma).epsilon(1e-12));
}

TEST_CASE("sinr_direct: two users on the same PRB at two BSs interfere") {
    const net::Scenario s = micro_scenario(2, 2, 1);
    const double sigma = 1e-11;
    // q[k][n][b]: user 0 -> 4e-10 at BS0, 1e-10 at BS1; user 1 -> 3e-10 / 5e-10
    const std::vector<double> q = {4e-10, 1e-10, 3e-10, 5e-10};
    const net::ChannelRealization ch = manual_channel(s, q, sigma);
    std::vector<std::uint8_t> x(4, 0);
    x[ch.knb(0, 0, 0)] = 1;  // user 0 on BS 0
    x[ch.knb(1, 0, 1)] = 1;  // user 1 on BS 1
    // interference on user 0 is the power of user 1 as received at BS 0
    CHECK(sinr_direct(x, ch, 0, 0, 0) ==
          doctest::Approx(4e-10 / (3e-10 + sigma)).epsilon(1e-12));
    CHECK(sinr_direct(x, ch, 1, 0, 1) ==
          doctest::Approx(5e-10 / (1e-10 + sigma)).epsilon(1e-12));
    CHECK_THROWS_AS(sinr_direct(x, ch, 0, 0, 1), std::logic_error);
}

TEST_CASE("sinr_direct: a different PRB contributes nothing") {
    const net::Scenario s = micro_scenario(2, 2, 2);
    const double sigma = 1e-11;
    std::vector<double> q(8, 2e-10);
    const net::ChannelRealization ch = manual_channel(s, q, sigma);
    std::vector<std::uint8_t> x(8, 0);
    x[ch.knb(0, 0, 0)] = 1;  // user 0, PRB 0, BS 0
    x[ch.knb(1, 1, 1)] = 1;  // user 1, PRB 1, BS 1
    CHECK(sinr_direct(x, ch, 0, 0, 0) == doctest::Approx(2e-10 / sigma).epsilon(1e-12));
}

TEST_CASE("big-M bound") {
    const net::Scenario s = micro_scenario();
    const double sigma = 1e-11;
    {
        const net::ChannelRealization ch = manual_channel(s, {2e-11}, sigma);
        CHECK(big_m_bound(ch) == doctest::Approx(2.1).epsilon(1e-12));  // q = 2 sigma
    }
    {
        net::ChannelRealization ch = manual_channel(s, {2e-11}, sigma);
        for (auto& v : ch.q_mw) v *= 2.0;
        CHECK(big_m_bound(ch) == doctest::Approx(4.2).epsilon(1e-12));  // homogeneity
    }
}

TEST_CASE("core constraints: the reference powers give a 3-PRB cap") {
    Rng rng(1);
    const net::Scenario s = net::generate_scenario(net::ScenarioConfig{}, rng);
    CHECK(s.max_prbs_per_user() == 3);

    // 10 users over 15 PRBs: serviceable; 16 users would not be
    net::ScenarioConfig crowded;
    crowded.n_users = 16;
    crowded.n_normal_users = 13;
    crowded.op_voting = {0.42, 0.84, 0.65};
    Rng rng2(2);
    const net::Scenario s16 = net::generate_scenario(crowded, rng2);
    const net::ChannelRealization ch16 = net::realize_channel(s16, rng2);
    const BuildResult b16 = build_wsrmax(s16, ch16, priorities(s16, 1.0, false));
    CHECK(b16.feasibility_warning);

    Rng rng3(2);
    const net::ChannelRealization ch = net::realize_channel(s, rng3);
    const BuildResult b10 = build_wsrmax(s, ch, priorities(s, 1.0, false));
    CHECK_FALSE(b10.feasibility_warning);
}

TEST_CASE("coupling pins phi and t at binary points") {
    // 2 users, 2 BSs, 1 PRB: solve and inspect the variable values
    const net::Scenario s = micro_scenario(2, 2, 1);
    const double sigma = 1e-11;
    const std::vector<double> q = {4e-10, 1e-10, 3e-10, 5e-10};
    const net::ChannelRealization ch = manual_channel(s, q, sigma);
    const BuildResult build = build_wsrmax(s, ch, {1.0, 1.0});
    const lp::LpSolution sol = lp::solve_milp(build.program);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);

    const auto& v = build.vars;
    // with one PRB per BS and the service constraint, each user takes one BS
    std::vector<std::uint8_t> x(4, 0);
    for (int k = 0; k < 2; ++k)
        for (int b = 0; b < 2; ++b)
            x[ch.knb(k, 0, b)] = sol.values[v.x(k, 0, b)] > 0.5 ? 1 : 0;

    for (int k = 0; k < 2; ++k) {
        for (int b = 0; b < 2; ++b) {
            const double t_val = sol.values[v.t(k, 0, b)];
            if (!x[ch.knb(k, 0, b)]) {
                CHECK(t_val == doctest::Approx(0.0).epsilon(1e-9));  // x = 0 forces t = 0
            } else {
                CHECK(t_val == doctest::Approx(sinr_direct(x, ch, k, 0, b)).epsilon(1e-9));
            }
            const int m = 1 - k, w = 1 - b;
            const double phi_val = sol.values[v.phi(k, 0, b, m, w)];
            if (x[ch.knb(m, 0, w)]) {
                CHECK(phi_val == doctest::Approx(t_val).epsilon(1e-9));  // x(m,w)=1 pinches phi=t
            } else {
                CHECK(phi_val == doctest::Approx(0.0).epsilon(1e-9));  // x(m,w)=0 forces phi=0
            }
        }
    }
}

TEST_CASE("wsrmax with unit priorities equals the unweighted SINR sum") {
    Rng rng(5);
    const net::Scenario s = testutil::toy_scenario(rng);
    const net::ChannelRealization ch = net::realize_channel(s, rng);
    const BuildResult build = build_wsrmax(s, ch, priorities(s, 1.0, false));
    const lp::LpSolution sol = lp::solve_milp(build.program);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    const AssignmentSolution a = extract_solution(build, sol, s, ch);
    double sum = 0.0;
    for (double v : a.sinr) sum += v;
    CHECK(sol.objective == doctest::Approx(sum).epsilon(1e-6));
}

TEST_CASE("alpha=10 priorities reproduce the reported weights") {
    Rng rng(3);
    const net::Scenario s = net::generate_scenario(net::ScenarioConfig{}, rng);
    const auto up = priorities(s, 10.0, true);
    for (int k = 0; k < 7; ++k) CHECK(up[k] == doctest::Approx(1.0));
    CHECK(up[7] == doctest::Approx(5.2));
    CHECK(up[8] == doctest::Approx(9.4));
    CHECK(up[9] == doctest::Approx(7.5));
    // before-prioritization: everyone at 1
    const auto base = priorities(s, 10.0, false);
    for (double u : base) CHECK(u == doctest::Approx(1.0));
}

TEST_CASE("tangent envelope dominates ln and is exact at tangencies") {
    const double s_lo = 0.05, s_hi = 4000.0;
    const auto lines = make_tangent_lines(s_lo, s_hi, 12);
    REQUIRE(lines.size() == 12);
    auto envelope = [&](double x) {
        double v = std::numeric_limits<double>::infinity();
        for (const auto& ln : lines) v = std::min(v, ln.slope * x + ln.intercept);
        return v;
    };
    const double declared = envelope_gap(lines, s_lo, s_hi);
    for (int i = 0; i <= 4000; ++i) {
        const double x = s_lo * std::pow(s_hi / s_lo, i / 4000.0);
        const double gap = envelope(x) - std::log(x);
        CHECK(gap >= -1e-12);
        CHECK(gap <= declared + 1e-9);
    }
    for (const auto& ln : lines) {
        CHECK(ln.slope * ln.abscissa + ln.intercept ==
              doctest::Approx(std::log(ln.abscissa)).epsilon(1e-12));
    }
}

TEST_CASE("tangent set must cover the attainable interval") {
    Rng rng(9);
    const net::Scenario s = testutil::toy_scenario(rng);
    const net::ChannelRealization ch = net::realize_channel(s, rng);
    // lines over a tiny interval cannot cover the channel's range
    const auto bad = make_tangent_lines(1.0, 1.5, 4);
    CHECK_THROWS_AS(build_pf(s, ch, priorities(s, 1.0, false), false, bad),
                    std::invalid_argument);
}

TEST_CASE("pf prioritized objective composes log users and weighted outpatients") {
    Rng rng(11);
    const net::Scenario s = testutil::toy_scenario(rng);
    const net::ChannelRealization ch = net::realize_channel(s, rng);
    const auto up = priorities(s, 10.0, true);
    const BuildResult build = build_pf(s, ch, up, true);
    const lp::LpSolution sol = lp::solve_milp(build.program);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    const AssignmentSolution a = extract_solution(build, sol, s, ch);

    auto envelope = [&](double x) {
        double v = std::numeric_limits<double>::infinity();
        for (const auto& ln : build.lines) v = std::min(v, ln.slope * x + ln.intercept);
        return v;
    };
    double hand = 0.0;
    for (int k = 0; k < s.num_users(); ++k) {
        hand += s.is_outpatient(k) ? up[k] * a.sinr[k] : envelope(a.sinr[k]);
    }
    CHECK(sol.objective == doctest::Approx(hand).epsilon(1e-6));
    // outpatients carry no log variable in prioritized mode
    CHECK(build.n_log_users == 2);
    CHECK(build.vars.l_index[2] == -1);
}

TEST_CASE("pf before-mode applies the log to every user") {
    Rng rng(12);
    const net::Scenario s = testutil::toy_scenario(rng);
    const net::ChannelRealization ch = net::realize_channel(s, rng);
    const BuildResult build = build_pf(s, ch, priorities(s, 1.0, false), false);
    CHECK(build.n_log_users == 3);
    for (int k = 0; k < 3; ++k) CHECK(build.vars.l_index[k] >= 0);
}

TEST_CASE("reliability floor") {
    CHECK(10.0 * std::log10(127.0) == doctest::Approx(21.0).epsilon(0.005));  // psi=127 is 21 dB

    Rng rng(13);
    const net::Scenario s = testutil::toy_scenario(rng);
    const net::ChannelRealization ch = net::realize_channel(s, rng);
    const auto up = priorities(s, 1.0, false);

    // psi = 0 leaves the optimum untouched (s >= 0 already holds)
    BuildResult plain = build_pf(s, ch, up, false);
    const lp::LpSolution base = lp::solve_milp(plain.program);
    BuildResult vacuous = build_pf(s, ch, up, false);
    add_reliability(vacuous, s, 0.0);
    const lp::LpSolution with0 = lp::solve_milp(vacuous.program);
    REQUIRE(base.status == lp::SolveStatus::Optimal);
    REQUIRE(with0.status == lp::SolveStatus::Optimal);
    CHECK(base.objective == doctest::Approx(with0.objective).epsilon(1e-9));

    // a floor above the attainable ceiling is infeasible
    BuildResult impossible = build_pf(s, ch, up, false);
    add_reliability(impossible, s, 1e9);
    CHECK(lp::solve_milp(impossible.program).status == lp::SolveStatus::Infeasible);

    // reliability requires the PF s variables
    BuildResult wsr = build_wsrmax(s, ch, up);
    CHECK_THROWS_AS(add_reliability(wsr, s, 127.0), std::invalid_argument);
    BuildResult neg = build_pf(s, ch, up, false);
    CHECK_THROWS_AS(add_reliability(neg, s, -1.0), std::invalid_argument);
}

TEST_CASE("extract_solution on the 1-user micro instance") {
    const net::Scenario s = micro_scenario();
    const double sigma = 1e-11;
    const net::ChannelRealization ch = manual_channel(s, {5e-10}, sigma);
    const BuildResult build = build_wsrmax(s, ch, {1.0});
    const lp::LpSolution sol = lp::solve_milp(build.program);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    const AssignmentSolution a = extract_solution(build, sol, s, ch);
    REQUIRE(a.assignment.size() == 1);
    CHECK(a.assignment[0] == std::tuple<int, int, int>{0, 0, 0});
    CHECK(a.sinr[0] == doctest::Approx(5e-10 / sigma).epsilon(1e-9));
    CHECK(a.prbs_held[0] == 1);
}

TEST_CASE("extract_solution rejects fractional binaries") {
    const net::Scenario s = micro_scenario();
    const net::ChannelRealization ch = manual_channel(s, {5e-10}, 1e-11);
    const BuildResult build = build_wsrmax(s, ch, {1.0});
    lp::LpSolution fake;
    fake.status = lp::SolveStatus::Optimal;
    fake.values.assign(build.program.num_variables(), 0.0);
    fake.values[build.vars.x(0, 0, 0)] = 0.3;
    CHECK_THROWS_AS(extract_solution(build, fake, s, ch), ConsistencyError);
}

TEST_CASE("priorities validate alpha and the build validates priorities") {
    Rng rng(14);
    const net::Scenario s = testutil::toy_scenario(rng);
    CHECK_THROWS_AS(priorities(s, -1.0, true), std::invalid_argument);
    const net::ChannelRealization ch = net::realize_channel(s, rng);
    CHECK_THROWS_AS(build_wsrmax(s, ch, {0.5, 1.0, 1.0}), std::invalid_argument);  // UP < 1
    CHECK_THROWS_AS(build_wsrmax(s, ch, {1.0, 1.0}), std::invalid_argument);  // size mismatch
}
