#pragma once

#include <cstdint>
#include <vector>

#include "hetsim/net/scenario.hpp"
#include "hetsim/rng.hpp"

namespace hetsim::net {

/// One fading realization over a scenario: the received-power tensor
/// q_mw[user][prb][bs] = P * h * a, with every factor kept so the
/// composition stays auditable. All powers in milliwatts.
struct ChannelRealization {
    int n_users = 0;
    int n_prbs = 0;  // per BS
    int n_bs = 0;
    std::vector<double> q_mw;  // [k][n][b]
    std::vector<double> h;     // fading power gains, [k][n][b]
    std::vector<double> a;     // attenuation gains, [k][b]
    double noise_mw_per_prb = 0.0;

    int knb(int k, int n, int b) const { return (k * n_prbs + n) * n_bs + b; }
    int kb(int k, int b) const { return k * n_bs + b; }

    double q(int k, int n, int b) const { return q_mw[knb(k, n, b)]; }
    double fading(int k, int n, int b) const { return h[knb(k, n, b)]; }
    double atten(int k, int b) const { return a[kb(k, b)]; }

    /// FNV-1a over the raw tensor bytes; used to assert that paired-seed
    /// campaigns really share realizations.
    std::uint64_t hash() const;
};

ChannelRealization realize_channel(const Scenario& s, Rng& rng);

}  // namespace hetsim::net
