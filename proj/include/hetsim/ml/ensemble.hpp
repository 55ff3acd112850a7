#pragma once

#include "hetsim/ml/decision_tree.hpp"
#include "hetsim/ml/logistic_regression.hpp"
#include "hetsim/ml/naive_bayes.hpp"

namespace hetsim::ml {

/// The three base classifiers trained on the same dataset.
struct EnsembleModel {
    NbModel nb;
    LrModel lr;
    DtModel dt;
};

EnsembleModel train_ensemble(const std::vector<Record>& train, const DtParams& dt_params = {},
                             const LrTrainOptions& lr_opts = {});

/// Evenly weighted soft vote: the arithmetic mean of the base classifier
/// probabilities. Throws std::invalid_argument for inputs outside [0, 1].
double soft_vote(double p_nb, double p_lr, double p_dt);

double predict_ensemble(const EnsembleModel& m, const CurrentState& cs);

/// Allocation priority: 1 for normal users, 1 + alpha * p_voting for
/// outpatients.
double priority(double p_voting, double alpha, bool is_outpatient);

}  // namespace hetsim::ml
