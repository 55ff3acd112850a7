#include "hetsim/ml/ensemble.hpp"

#include <stdexcept>

namespace hetsim::ml {

EnsembleModel train_ensemble(const std::vector<Record>& train, const DtParams& dt_params,
                             const LrTrainOptions& lr_opts) {
    EnsembleModel m;
    m.nb = train_nb(train);
    m.lr = train_lr(train, lr_opts).model;
    m.dt = train_dt(train, dt_params);
    return m;
}

double soft_vote(double p_nb, double p_lr, double p_dt) {
    for (double p : {p_nb, p_lr, p_dt}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("soft_vote: probability outside [0, 1]");
        }
    }
    return (p_nb + p_lr + p_dt) / 3.0;
}

double predict_ensemble(const EnsembleModel& m, const CurrentState& cs) {
    return soft_vote(predict_nb(m.nb, cs), predict_lr(m.lr, cs), predict_dt(m.dt, cs));
}

double priority(double p_voting, double alpha, bool is_outpatient) {
    if (!is_outpatient) return 1.0;
    return 1.0 + alpha * p_voting;
}

}  // namespace hetsim::ml
