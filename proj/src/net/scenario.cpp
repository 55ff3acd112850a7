#include "hetsim/net/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "json.hpp"

namespace hetsim::net {

void ScenarioConfig::validate() const {
    if (n_pbs < 0) throw ConfigError("n_pbs must be >= 0");
    if (n_users < 1) throw ConfigError("n_users must be >= 1");
    if (n_normal_users < 0 || n_normal_users > n_users) {
        throw ConfigError("n_normal_users must lie in [0, n_users]");
    }
    if (n_prbs_per_bs < 1) throw ConfigError("n_prbs_per_bs must be >= 1");
    if (pm_dbm < p_dbm) throw ConfigError("pm_dbm must be >= p_dbm");
    if (prb_bandwidth_hz <= 0) throw ConfigError("prb_bandwidth_hz must be positive");
    if (!(mbs_range_m[0] > 0) || mbs_range_m[1] < mbs_range_m[0]) {
        throw ConfigError("mbs_range_m must be a positive non-degenerate range");
    }
    if (!(pbs_range_m[0] > 0) || pbs_range_m[1] < pbs_range_m[0]) {
        throw ConfigError("pbs_range_m must be a positive non-degenerate range");
    }
    if (n_pbs > 0 && pbs_distance_m <= 0) throw ConfigError("pbs_distance_m must be positive");
    const int n_ops = n_users - n_normal_users;
    if (static_cast<int>(op_voting.size()) != n_ops) {
        throw ConfigError("op_voting must have one entry per outpatient");
    }
    for (double p : op_voting) {
        if (p < 0.0 || p > 1.0) throw ConfigError("op_voting entries must lie in [0, 1]");
    }
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("scenario config parse error in " + path + ": " + e.what());
    }
    ScenarioConfig cfg;
    auto get = [&](const char* key, auto& out) {
        if (j.contains(key)) out = j.at(key).template get<std::decay_t<decltype(out)>>();
    };
    get("n_pbs", cfg.n_pbs);
    get("n_users", cfg.n_users);
    get("n_normal_users", cfg.n_normal_users);
    get("n_prbs_per_bs", cfg.n_prbs_per_bs);
    get("p_dbm", cfg.p_dbm);
    get("pm_dbm", cfg.pm_dbm);
    get("noise_density_dbm_hz", cfg.noise_density_dbm_hz);
    get("prb_bandwidth_hz", cfg.prb_bandwidth_hz);
    get("pbs_distance_m", cfg.pbs_distance_m);
    get("op_voting", cfg.op_voting);
    if (j.contains("mbs_range_m")) {
        auto r = j.at("mbs_range_m").get<std::vector<double>>();
        if (r.size() != 2) throw ConfigError("mbs_range_m must be [lo, hi]");
        cfg.mbs_range_m[0] = r[0];
        cfg.mbs_range_m[1] = r[1];
    }
    if (j.contains("pbs_range_m")) {
        auto r = j.at("pbs_range_m").get<std::vector<double>>();
        if (r.size() != 2) throw ConfigError("pbs_range_m must be [lo, hi]");
        cfg.pbs_range_m[0] = r[0];
        cfg.pbs_range_m[1] = r[1];
    }
    cfg.validate();
    return cfg;
}

void save_scenario_config(const ScenarioConfig& cfg, const std::string& path) {
    nlohmann::json j;
    j["n_pbs"] = cfg.n_pbs;
    j["n_users"] = cfg.n_users;
    j["n_normal_users"] = cfg.n_normal_users;
    j["n_prbs_per_bs"] = cfg.n_prbs_per_bs;
    j["p_dbm"] = cfg.p_dbm;
    j["pm_dbm"] = cfg.pm_dbm;
    j["noise_density_dbm_hz"] = cfg.noise_density_dbm_hz;
    j["prb_bandwidth_hz"] = cfg.prb_bandwidth_hz;
    j["mbs_range_m"] = {cfg.mbs_range_m[0], cfg.mbs_range_m[1]};
    j["pbs_range_m"] = {cfg.pbs_range_m[0], cfg.pbs_range_m[1]};
    j["pbs_distance_m"] = cfg.pbs_distance_m;
    j["op_voting"] = cfg.op_voting;
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write scenario config: " + path);
    out << j.dump(2) << "\n";
}

int Scenario::num_normal_users() const {
    int n = 0;
    for (const auto& u : users) n += (u.kind == UserKind::Normal) ? 1 : 0;
    return n;
}

int Scenario::max_prbs_per_user() const {
    return static_cast<int>(std::floor(max_power_per_connection_mw / tx_power_per_prb_mw + 1e-9));
}

double Scenario::distance(int user_index, int bs_index) const {
    const auto& u = users[user_index];
    const auto& b = base_stations[bs_index];
    return std::hypot(u.x - b.x, u.y - b.y);
}

Scenario generate_scenario(const ScenarioConfig& cfg, Rng& rng) {
    cfg.validate();

    Scenario s;
    s.prbs_per_bs = cfg.n_prbs_per_bs;
    s.tx_power_per_prb_mw = dbm_to_mw(cfg.p_dbm);
    s.max_power_per_connection_mw = dbm_to_mw(cfg.pm_dbm);
    s.noise_density_dbm_hz = cfg.noise_density_dbm_hz;
    s.prb_bandwidth_hz = cfg.prb_bandwidth_hz;
    s.op_voting = cfg.op_voting;

    s.base_stations.push_back({0, BsKind::Macro, 0.0, 0.0});
    for (int p = 0; p < cfg.n_pbs; ++p) {
        const double angle = 2.0 * std::numbers::pi * p / cfg.n_pbs;
        s.base_stations.push_back({1 + p, BsKind::Pico,
                                   cfg.pbs_distance_m * std::cos(angle),
                                   cfg.pbs_distance_m * std::sin(angle)});
    }

    const int n_bs = s.num_bs();
    for (int k = 0; k < cfg.n_users; ++k) {
        // Round-robin anchor: with the default counts this puts 4 users in
        // the MBS ring and 3 in each PBS ring.
        const auto& anchor = s.base_stations[k % n_bs];
        const double* range = (anchor.kind == BsKind::Macro) ? cfg.mbs_range_m : cfg.pbs_range_m;
        // Uniform over the annulus area.
        const double r2 = rng.uniform(range[0] * range[0], range[1] * range[1]);
        const double r = std::sqrt(r2);
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);

        UserTerminal u;
        u.id = k + 1;
        if (k < cfg.n_normal_users) {
            u.kind = UserKind::Normal;
        } else {
            u.kind = UserKind::Outpatient;
            u.op_index = k - cfg.n_normal_users;
        }
        u.x = anchor.x + r * std::cos(theta);
        u.y = anchor.y + r * std::sin(theta);
        s.users.push_back(u);
    }
    return s;
}

}  // namespace hetsim::net
