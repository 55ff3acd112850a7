#pragma once

#include "hetsim/ml/dataset.hpp"

namespace hetsim::ml {

/// Categorical naive Bayes with add-one smoothing on the conditionals.
/// Priors are the raw class frequencies.
struct NbModel {
    std::array<double, kNumClasses> prior{};
    std::array<int, kNumClasses> class_count{};
    int cond_count[kNumFeatures][kLevelsPerFeature][kNumClasses] = {};
    double smoothing = 1.0;

    double cond_prob(int feature, int level, int cls) const {
        return (cond_count[feature][level][cls] + smoothing) /
               (class_count[cls] + smoothing * kLevelsPerFeature);
    }
};

/// Throws TrainError on an empty dataset. A single-class dataset is allowed
/// and yields the degenerate prior.
NbModel train_nb(const std::vector<Record>& train);

/// Normalized posterior P(stroke = 1 | state): the prior-times-likelihood
/// product is evaluated for both classes and divided by their sum.
double predict_nb(const NbModel& m, const CurrentState& cs);

}  // namespace hetsim::ml
