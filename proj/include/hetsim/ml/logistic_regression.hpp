#pragma once

#include "hetsim/ml/dataset.hpp"

namespace hetsim::ml {

/// Logistic model over ordinally encoded levels (level index 0/1/2 used as
/// the numeric feature value).
struct LrModel {
    double beta0 = 0.0;
    std::array<double, kNumFeatures> betas{};

    double linear_index(const CurrentState& cs) const {
        double x = beta0;
        for (int f = 0; f < kNumFeatures; ++f) x += betas[f] * cs.levels[f];
        return x;
    }
};

struct LrTrainOptions {
    double learning_rate = 0.1;  // base step on the mean-gradient direction
    int max_iterations = 5000;
    double ll_tolerance = 1e-8;  // stop when the log-likelihood gain drops below
};

struct LrTrainResult {
    LrModel model;
    bool converged = false;  // false when the iteration cap halted training
    int iterations = 0;
    std::vector<double> ll_trace;  // log-likelihood after each accepted step
};

double logistic(double x);

/// Binomial log-likelihood of the training set (sum over records).
double lr_log_likelihood(const std::vector<Record>& train, const LrModel& m);

/// Analytic gradient of lr_log_likelihood w.r.t. (beta0, betas...).
std::array<double, kNumFeatures + 1> lr_log_likelihood_gradient(const std::vector<Record>& train,
                                                                const LrModel& m);

/// Gradient ascent with step halving so the log-likelihood trace is
/// nondecreasing. Throws TrainError on an empty dataset; hitting the
/// iteration cap is reported through `converged`, not an exception.
LrTrainResult train_lr(const std::vector<Record>& train, const LrTrainOptions& opts = {});

double predict_lr(const LrModel& m, const CurrentState& cs);

}  // namespace hetsim::ml
