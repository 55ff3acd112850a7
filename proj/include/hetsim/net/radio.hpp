#pragma once

#include "hetsim/rng.hpp"

namespace hetsim::net {

enum class BsKind { Macro, Pico };

/// Distance-dependent path loss in dB for the urban macro / pico laws.
/// Macro: 128 + 37.6 log10(d/1km); Pico: 140.7 + 36.7 log10(d/1km).
/// Throws std::invalid_argument for non-positive distances.
double path_loss_db(BsKind kind, double distance_m);

/// Linear power gain 10^(-PL/10). Strictly decreasing in distance and
/// always < 1 over the supported geometry.
double attenuation_gain(BsKind kind, double distance_m);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// Integrated thermal noise over one allocation bandwidth, in mW.
/// Throws std::invalid_argument for non-positive bandwidth.
double noise_power_mw(double density_dbm_hz, double bandwidth_hz);

/// Rayleigh-fading power gain |h|^2: exponential with mean 1.
double draw_fading(Rng& rng);

}  // namespace hetsim::net
