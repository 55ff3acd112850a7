#include "hetsim/ml/naive_bayes.hpp"

namespace hetsim::ml {

NbModel train_nb(const std::vector<Record>& train) {
    if (train.empty()) throw TrainError("train_nb: empty dataset");

    NbModel m;
    for (const auto& r : train) {
        m.class_count[r.stroke] += 1;
        for (int f = 0; f < kNumFeatures; ++f) {
            m.cond_count[f][r.levels[f]][r.stroke] += 1;
        }
    }
    const double n = static_cast<double>(train.size());
    for (int c = 0; c < kNumClasses; ++c) m.prior[c] = m.class_count[c] / n;
    return m;
}

double predict_nb(const NbModel& m, const CurrentState& cs) {
    double score[kNumClasses];
    for (int c = 0; c < kNumClasses; ++c) {
        double s = m.prior[c];
        for (int f = 0; f < kNumFeatures; ++f) {
            s *= m.cond_prob(f, cs.levels[f], c);
        }
        score[c] = s;
    }
    return score[1] / (score[0] + score[1]);
}

}  // namespace hetsim::ml
