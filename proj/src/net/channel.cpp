#include "hetsim/net/channel.hpp"

#include <cstring>

namespace hetsim::net {

namespace {

void hash_bytes(std::uint64_t& state, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        state ^= p[i];
        state *= 0x100000001B3ULL;
    }
}

}  // namespace

std::uint64_t ChannelRealization::hash() const {
    std::uint64_t state = 0xCBF29CE484222325ULL;
    hash_bytes(state, q_mw.data(), q_mw.size() * sizeof(double));
    hash_bytes(state, &noise_mw_per_prb, sizeof(double));
    return state;
}

ChannelRealization realize_channel(const Scenario& s, Rng& rng) {
    ChannelRealization ch;
    ch.n_users = s.num_users();
    ch.n_prbs = s.prbs_per_bs;
    ch.n_bs = s.num_bs();
    ch.q_mw.resize(static_cast<std::size_t>(ch.n_users) * ch.n_prbs * ch.n_bs);
    ch.h.resize(ch.q_mw.size());
    ch.a.resize(static_cast<std::size_t>(ch.n_users) * ch.n_bs);
    ch.noise_mw_per_prb = noise_power_mw(s.noise_density_dbm_hz, s.prb_bandwidth_hz);

    const double p = s.tx_power_per_prb_mw;
    for (int k = 0; k < ch.n_users; ++k) {
        for (int b = 0; b < ch.n_bs; ++b) {
            ch.a[ch.kb(k, b)] = attenuation_gain(s.base_stations[b].kind, s.distance(k, b));
        }
    }
    // Fading is drawn i.i.d. per (user, prb, bs) in a fixed index order so a
    // seed pins the whole tensor.
    for (int k = 0; k < ch.n_users; ++k) {
        for (int n = 0; n < ch.n_prbs; ++n) {
            for (int b = 0; b < ch.n_bs; ++b) {
                const int i = ch.knb(k, n, b);
                ch.h[i] = draw_fading(rng);
                ch.q_mw[i] = p * ch.h[i] * ch.a[ch.kb(k, b)];
            }
        }
    }
    return ch;
}

}  // namespace hetsim::net
