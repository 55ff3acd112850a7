#include "hetsim/sim/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace hetsim::sim {

double mean(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean: no values");
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

namespace {

double sum_sq_dev(std::span<const double> values, double mu) {
    double acc = 0.0;
    for (double v : values) acc += (v - mu) * (v - mu);
    return acc;
}

}  // namespace

double population_sd(std::span<const double> values) {
    if (values.size() < 2) throw std::invalid_argument("population_sd: need at least 2 values");
    return std::sqrt(sum_sq_dev(values, mean(values)) / static_cast<double>(values.size()));
}

double sample_sd(std::span<const double> values) {
    if (values.size() < 2) throw std::invalid_argument("sample_sd: need at least 2 values");
    return std::sqrt(sum_sq_dev(values, mean(values)) / static_cast<double>(values.size() - 1));
}

double fairness_sd(std::span<const double> per_user, std::span<const int> selected_users) {
    std::vector<double> picked;
    picked.reserve(selected_users.size());
    for (int k : selected_users) picked.push_back(per_user[static_cast<std::size_t>(k)]);
    if (picked.size() < 2) throw std::invalid_argument("fairness_sd: need at least 2 users");
    return population_sd(picked);
}

Ci confidence_interval(std::span<const double> samples, double z) {
    if (samples.size() < 2) {
        throw std::invalid_argument("confidence_interval: need at least 2 samples");
    }
    const double mu = mean(samples);
    const double sd = sample_sd(samples);
    return {mu, z * sd / std::sqrt(static_cast<double>(samples.size()))};
}

}  // namespace hetsim::sim
