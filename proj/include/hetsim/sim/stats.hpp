#pragma once

#include <span>
#include <vector>

namespace hetsim::sim {

double mean(std::span<const double> values);

/// Population standard deviation (divides by n). Throws
/// std::invalid_argument for fewer than 2 values.
double population_sd(std::span<const double> values);

/// Sample standard deviation (divides by n-1).
double sample_sd(std::span<const double> values);

/// Population SD over the selected subset of per-user values; the fairness
/// measure used throughout. Throws std::invalid_argument when fewer than 2
/// users are selected.
double fairness_sd(std::span<const double> per_user, std::span<const int> selected_users);

struct Ci {
    double mean = 0.0;
    double half_width = 0.0;
};

/// Normal-approximation confidence interval: mean +/- z * sample SD / sqrt(n)
/// with z = 1.96 for the 95% level. Throws std::invalid_argument for fewer
/// than 2 samples.
Ci confidence_interval(std::span<const double> samples, double z = 1.96);

}  // namespace hetsim::sim
