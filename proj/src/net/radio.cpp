#include "hetsim/net/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace hetsim::net {

double path_loss_db(BsKind kind, double distance_m) {
    if (!(distance_m > 0.0)) {
        throw std::invalid_argument("path_loss_db: distance must be positive");
    }
    const double d_km = distance_m / 1000.0;
    if (kind == BsKind::Macro) {
        return 128.0 + 37.6 * std::log10(d_km);
    }
    return 140.7 + 36.7 * std::log10(d_km);
}

double attenuation_gain(BsKind kind, double distance_m) {
    return std::pow(10.0, -path_loss_db(kind, distance_m) / 10.0);
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double noise_power_mw(double density_dbm_hz, double bandwidth_hz) {
    if (!(bandwidth_hz > 0.0)) {
        throw std::invalid_argument("noise_power_mw: bandwidth must be positive");
    }
    return dbm_to_mw(density_dbm_hz + 10.0 * std::log10(bandwidth_hz));
}

double draw_fading(Rng& rng) { return rng.exponential(); }

}  // namespace hetsim::net
