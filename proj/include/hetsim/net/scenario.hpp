#pragma once

#include <string>
#include <vector>

#include "hetsim/errors.hpp"
#include "hetsim/net/radio.hpp"
#include "hetsim/rng.hpp"

namespace hetsim::net {

struct BaseStation {
    int id = 0;  // 0-based, unique within a scenario
    BsKind kind = BsKind::Macro;
    double x = 0.0;
    double y = 0.0;

    bool operator==(const BaseStation&) const = default;
};

enum class UserKind { Normal, Outpatient };

struct UserTerminal {
    int id = 0;  // 1-based; 1..NU are normal, NU+1..K are outpatients
    UserKind kind = UserKind::Normal;
    int op_index = -1;  // 0-based outpatient slot, -1 for normal users
    double x = 0.0;
    double y = 0.0;

    bool operator==(const UserTerminal&) const = default;
};

/// Scenario generation knobs. Defaults reproduce the reference urban HetNet
/// parameter set (1 MBS + 2 PBS, 10 users of which 3 are outpatients,
/// 5 PRBs per BS, 17/23 dBm powers, -162 dBm/Hz noise density).
struct ScenarioConfig {
    int n_pbs = 2;
    int n_users = 10;
    int n_normal_users = 7;
    int n_prbs_per_bs = 5;
    double p_dbm = 17.0;   // transmit power per PRB
    double pm_dbm = 23.0;  // max power per uplink connection
    double noise_density_dbm_hz = -162.0;
    double prb_bandwidth_hz = 180e3;
    double mbs_range_m[2] = {300.0, 600.0};
    double pbs_range_m[2] = {40.0, 100.0};
    double pbs_distance_m = 450.0;  // PBS offset from the MBS site
    // Soft-voted stroke likelihoods per outpatient, feeding the priorities.
    std::vector<double> op_voting = {0.42, 0.84, 0.65};

    void validate() const;  // throws ConfigError
};

ScenarioConfig load_scenario_config(const std::string& path);
void save_scenario_config(const ScenarioConfig& cfg, const std::string& path);

struct Scenario {
    std::vector<BaseStation> base_stations;
    std::vector<UserTerminal> users;
    int prbs_per_bs = 0;
    double tx_power_per_prb_mw = 0.0;
    double max_power_per_connection_mw = 0.0;
    double noise_density_dbm_hz = 0.0;
    double prb_bandwidth_hz = 0.0;
    std::vector<double> op_voting;

    int num_bs() const { return static_cast<int>(base_stations.size()); }
    int num_users() const { return static_cast<int>(users.size()); }
    int num_normal_users() const;
    int num_outpatients() const { return num_users() - num_normal_users(); }
    int total_prbs() const { return prbs_per_bs * num_bs(); }

    /// floor(PM / P): how many PRBs one uplink connection can power.
    int max_prbs_per_user() const;

    bool is_outpatient(int user_index) const {  // 0-based index
        return users[user_index].kind == UserKind::Outpatient;
    }
    double distance(int user_index, int bs_index) const;

    bool operator==(const Scenario&) const = default;
};

/// Lays out 1 MBS + n_pbs PBSs and places users uniformly at random in the
/// distance ring of their anchor BS (anchors assigned round-robin so the
/// default split is 4 MBS / 3 + 3 PBS users). Throws ConfigError for
/// impossible geometry.
Scenario generate_scenario(const ScenarioConfig& cfg, Rng& rng);

}  // namespace hetsim::net
