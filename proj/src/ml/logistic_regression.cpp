#include "hetsim/ml/logistic_regression.hpp"

#include <cmath>

namespace hetsim::ml {

double logistic(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double lr_log_likelihood(const std::vector<Record>& train, const LrModel& m) {
    double ll = 0.0;
    for (const auto& r : train) {
        const double x = m.linear_index(r.state());
        // log p for y=1 is -log(1+e^-x); for y=0 it is -log(1+e^x).
        const double z = (r.stroke == 1) ? x : -x;
        ll += (z >= 0.0) ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
    }
    return ll;
}

std::array<double, kNumFeatures + 1> lr_log_likelihood_gradient(const std::vector<Record>& train,
                                                                const LrModel& m) {
    std::array<double, kNumFeatures + 1> g{};
    for (const auto& r : train) {
        const double resid = r.stroke - logistic(m.linear_index(r.state()));
        g[0] += resid;
        for (int f = 0; f < kNumFeatures; ++f) g[f + 1] += resid * r.levels[f];
    }
    return g;
}

LrTrainResult train_lr(const std::vector<Record>& train, const LrTrainOptions& opts) {
    if (train.empty()) throw TrainError("train_lr: empty dataset");

    LrTrainResult res;
    const double n = static_cast<double>(train.size());
    double ll = lr_log_likelihood(train, res.model);
    res.ll_trace.push_back(ll);

    for (int it = 0; it < opts.max_iterations; ++it) {
        const auto g = lr_log_likelihood_gradient(train, res.model);

        double step = opts.learning_rate;
        LrModel candidate;
        double cand_ll = -std::numeric_limits<double>::infinity();
        bool improved = false;
        for (int halving = 0; halving < 60; ++halving) {
            candidate = res.model;
            candidate.beta0 += step * g[0] / n;
            for (int f = 0; f < kNumFeatures; ++f) candidate.betas[f] += step * g[f + 1] / n;
            cand_ll = lr_log_likelihood(train, candidate);
            if (cand_ll >= ll) {
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) {
            // Gradient direction no longer gains at any representable step.
            res.converged = true;
            res.iterations = it;
            return res;
        }

        const double gain = cand_ll - ll;
        res.model = candidate;
        ll = cand_ll;
        res.ll_trace.push_back(ll);
        res.iterations = it + 1;
        if (gain < opts.ll_tolerance) {
            res.converged = true;
            return res;
        }
    }
    res.converged = false;  // iteration cap; last iterate is still returned
    return res;
}

double predict_lr(const LrModel& m, const CurrentState& cs) { return logistic(m.linear_index(cs)); }

}  // namespace hetsim::ml
