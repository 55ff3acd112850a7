#pragma once

// Shared toy-instance builders for the allocation tests.

#include "hetsim/net/channel.hpp"
#include "hetsim/net/scenario.hpp"

namespace testutil {

using namespace hetsim;

/// 2 BSs x 2 PRBs, 3 users (last one an outpatient with p_voting 0.84).
inline net::ScenarioConfig toy_config() {
    net::ScenarioConfig cfg;
    cfg.n_pbs = 1;
    cfg.n_users = 3;
    cfg.n_normal_users = 2;
    cfg.n_prbs_per_bs = 2;
    cfg.op_voting = {0.84};
    return cfg;
}

inline net::Scenario toy_scenario(Rng& rng) {
    return net::generate_scenario(toy_config(), rng);
}

/// Hand-built channel over an explicit q tensor (index [k][n][b], mW).
/// h and a are chosen so q = P * h * a holds exactly.
inline net::ChannelRealization manual_channel(const net::Scenario& s,
                                              const std::vector<double>& q,
                                              double noise_mw) {
    net::ChannelRealization ch;
    ch.n_users = s.num_users();
    ch.n_prbs = s.prbs_per_bs;
    ch.n_bs = s.num_bs();
    ch.noise_mw_per_prb = noise_mw;
    ch.q_mw = q;
    ch.a.assign(static_cast<std::size_t>(ch.n_users) * ch.n_bs, 0.5);
    ch.h.resize(q.size());
    for (int k = 0; k < ch.n_users; ++k)
        for (int n = 0; n < ch.n_prbs; ++n)
            for (int b = 0; b < ch.n_bs; ++b) {
                const int i = ch.knb(k, n, b);
                ch.h[i] = ch.q_mw[i] / (s.tx_power_per_prb_mw * 0.5);
            }
    return ch;
}

}  // namespace testutil
