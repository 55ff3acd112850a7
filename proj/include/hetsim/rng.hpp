#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hetsim {

// Deterministic random stream. Raw bits come from mt19937_64; the floating
// conversions are hand-rolled so values do not depend on the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Exponential with mean 1 by inverse CDF; log argument stays in (0, 1].
    double exponential() { return -std::log(1.0 - next_double()); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

/// Independent child seed for stream `stream` of a campaign with the given
/// master seed (splitmix64 finalizer, avoids correlated engine seedings).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace hetsim
