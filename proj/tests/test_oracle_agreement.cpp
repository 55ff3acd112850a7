#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hetsim/opt/oracle.hpp"
#include "test_helpers.hpp"

using namespace hetsim;
using namespace hetsim::opt;

namespace {

struct ToyInstance {
    net::Scenario scenario;
    net::ChannelRealization channel;
};

ToyInstance toy_instance(std::uint64_t seed) {
    Rng rng(derive_seed(0xA11CE, seed));
    ToyInstance t;
    t.scenario = testutil::toy_scenario(rng);
    t.channel = net::realize_channel(t.scenario, rng);
    return t;
}

}  // namespace

TEST_CASE("oracle basics: single user picks its best PRBs under the power cap") {
    net::Scenario s;
    s.base_stations.push_back({0, net::BsKind::Macro, 0.0, 0.0});
    s.users.push_back({1, net::UserKind::Normal, -1, 400.0, 0.0});
    s.prbs_per_bs = 2;
    s.tx_power_per_prb_mw = net::dbm_to_mw(17.0);
    s.max_power_per_connection_mw = net::dbm_to_mw(23.0);  // cap 3 >= both PRBs
    s.noise_density_dbm_hz = -162.0;
    s.prb_bandwidth_hz = 180e3;
    const double sigma = 1e-11;
    const net::ChannelRealization ch = testutil::manual_channel(s, {6e-10, 2e-10}, sigma);
    const OracleResult r = oracle_assign(s, ch, {Approach::WSRMax, false, {1.0}, 0.0});
    REQUIRE(r.feasible);
    // both PRBs fit under the cap, so it takes both
    CHECK(r.objective == doctest::Approx((6e-10 + 2e-10) / sigma).epsilon(1e-12));
    CHECK(r.x[ch.knb(0, 0, 0)] == 1);
    CHECK(r.x[ch.knb(0, 1, 0)] == 1);
}

TEST_CASE("oracle tie-break picks the lexicographically smallest assignment") {
    net::Scenario s;
    s.base_stations.push_back({0, net::BsKind::Macro, 0.0, 0.0});
    s.users.push_back({1, net::UserKind::Normal, -1, 400.0, 0.0});
    s.prbs_per_bs = 2;
    s.tx_power_per_prb_mw = net::dbm_to_mw(17.0);
    s.max_power_per_connection_mw = s.tx_power_per_prb_mw;  // cap 1: forced to choose
    s.noise_density_dbm_hz = -162.0;
    s.prb_bandwidth_hz = 180e3;
    // both PRBs identical: a tie the lexicographic rule must break
    const net::ChannelRealization ch = testutil::manual_channel(s, {3e-10, 3e-10}, 1e-11);
    const OracleResult r = oracle_assign(s, ch, {Approach::WSRMax, false, {1.0}, 0.0});
    REQUIRE(r.feasible);
    CHECK(r.x[ch.knb(0, 0, 0)] == 1);  // (k=0, n=0) preferred over (k=0, n=1)
    CHECK(r.x[ch.knb(0, 1, 0)] == 0);
}

TEST_CASE("oracle refuses oversized search spaces") {
    Rng rng(1);
    const net::Scenario s = net::generate_scenario(net::ScenarioConfig{}, rng);  // 11^15
    const net::ChannelRealization ch = net::realize_channel(s, rng);
    CHECK(oracle_search_space(s) > 1e7);
    CHECK_THROWS_AS(oracle_assign(s, ch, {Approach::WSRMax, false, priorities(s, 1.0, false), 0.0}),
                    std::invalid_argument);
}

TEST_CASE("solver matches the oracle on 50 seeded toys (wsrmax, 1e-4 relative)") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ToyInstance t = toy_instance(seed);
        const auto up = priorities(t.scenario, 10.0, true);
        const BuildResult build = build_wsrmax(t.scenario, t.channel, up);
        const lp::LpSolution sol = lp::solve_milp(build.program);
        REQUIRE(sol.status == lp::SolveStatus::Optimal);
        const OracleResult oracle =
            oracle_assign(t.scenario, t.channel, {Approach::WSRMax, true, up, 0.0});
        REQUIRE(oracle.feasible);
        CHECK(std::abs(sol.objective - oracle.objective) /
                  std::max(1.0, std::abs(oracle.objective)) <=
              1e-4);
        // the big-M bound really does dominate every extracted t
        const AssignmentSolution a = extract_solution(build, sol, t.scenario, t.channel);
        for (const auto& [k, n, b] : a.assignment) {
            (void)n;
            (void)b;
            CHECK(a.sinr[k] <= build.big_m * t.scenario.max_prbs_per_user());
        }
    }
}

TEST_CASE("pf solver objective dominates the true-ln oracle within the envelope gap") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const ToyInstance t = toy_instance(seed);
        for (bool prioritize : {false, true}) {
            const auto up = priorities(t.scenario, 10.0, prioritize);
            const BuildResult build = build_pf(t.scenario, t.channel, up, prioritize);
            const lp::LpSolution sol = lp::solve_milp(build.program);
            REQUIRE(sol.status == lp::SolveStatus::Optimal);
            const OracleResult oracle =
                oracle_assign(t.scenario, t.channel, {Approach::PF, prioritize, up, 0.0});
            REQUIRE(oracle.feasible);
            // envelope >= ln pointwise, so the solver cannot fall below the
            // true-ln optimum; it may exceed it by at most the total gap.
            CHECK(sol.objective >= oracle.objective - 1e-6);
            CHECK(sol.objective <= oracle.objective + build.envelope_gap_total + 1e-6);
        }
    }
}

TEST_CASE("reliability feasibility decisions match the oracle") {
    int checked_feasible = 0, checked_infeasible = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const ToyInstance t = toy_instance(seed);
        const auto up = priorities(t.scenario, 1.0, false);
        // a moderate floor: feasible on some channels, not on others
        const double psi = 50.0;
        BuildResult build = build_pf(t.scenario, t.channel, up, false);
        add_reliability(build, t.scenario, psi);
        const lp::LpSolution sol = lp::solve_milp(build.program);
        const OracleResult oracle =
            oracle_assign(t.scenario, t.channel, {Approach::ReliabilityPF, false, up, psi});
        if (oracle.feasible) {
            REQUIRE(sol.status == lp::SolveStatus::Optimal);
            const AssignmentSolution a = extract_solution(build, sol, t.scenario, t.channel);
            for (int k = 0; k < t.scenario.num_users(); ++k) {
                if (!t.scenario.is_outpatient(k)) CHECK(a.sinr[k] >= psi * (1.0 - 1e-6));
            }
            ++checked_feasible;
        } else {
            CHECK(sol.status == lp::SolveStatus::Infeasible);
            ++checked_infeasible;
        }
    }
    // the toy set must exercise both outcomes for the test to mean anything
    CHECK(checked_feasible > 0);
    CHECK(checked_infeasible > 0);
}

TEST_CASE("weighted outpatient SINR is nondecreasing in alpha (oracle-exact on toys)") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ToyInstance t = toy_instance(seed);
        double prev = -1.0;
        for (double alpha : {1.0, 2.0, 5.0, 10.0}) {
            const auto up = priorities(t.scenario, alpha, true);
            const OracleResult r =
                oracle_assign(t.scenario, t.channel, {Approach::WSRMax, true, up, 0.0});
            REQUIRE(r.feasible);
            double weighted = 0.0;
            for (int k = 0; k < t.scenario.num_users(); ++k) {
                if (t.scenario.is_outpatient(k)) {
                    weighted += t.scenario.op_voting[t.scenario.users[k].op_index] * r.sinr[k];
                }
            }
            CHECK(weighted >= prev - 1e-9 * std::max(1.0, std::abs(prev)));
            prev = weighted;
        }
    }
}

TEST_CASE("doubling an outpatient weight never lowers its weighted term") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ToyInstance t = toy_instance(seed);
        auto up = priorities(t.scenario, 2.0, true);
        const int op = 2;  // the toy outpatient
        const OracleResult before =
            oracle_assign(t.scenario, t.channel, {Approach::WSRMax, true, up, 0.0});
        const double w = up[op];
        up[op] *= 2.0;
        const OracleResult after =
            oracle_assign(t.scenario, t.channel, {Approach::WSRMax, true, up, 0.0});
        REQUIRE(before.feasible);
        REQUIRE(after.feasible);
        CHECK(w * after.sinr[op] >= w * before.sinr[op] - 1e-9);
    }
}
