#include "hetsim/ml/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace hetsim::ml {

ConfusionCounts confusion(const Predictor& predict, const std::vector<Record>& test,
                          double threshold) {
    if (test.empty()) throw std::invalid_argument("confusion: empty test set");
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("confusion: threshold must lie in (0, 1)");
    }
    ConfusionCounts c;
    for (const auto& r : test) {
        const bool positive = predict(r.state()) >= threshold;
        if (positive) {
            (r.stroke == 1 ? c.tp : c.fp) += 1;
        } else {
            (r.stroke == 1 ? c.fn : c.tn) += 1;
        }
    }
    return c;
}

namespace {

std::optional<double> pct(int num, int den) {
    if (den == 0) return std::nullopt;
    return 100.0 * num / den;
}

}  // namespace

MetricReport metrics(const ConfusionCounts& c) {
    MetricReport r;
    r.accuracy = pct(c.tp + c.tn, c.total());
    r.recall = pct(c.tp, c.tp + c.fn);
    r.specificity = pct(c.tn, c.tn + c.fp);
    r.precision = pct(c.tp, c.tp + c.fp);
    r.npv = pct(c.tn, c.tn + c.fn);
    r.fpr = pct(c.fp, c.fp + c.tn);
    r.fnr = pct(c.fn, c.fn + c.tp);
    if (r.precision && r.recall && (*r.precision + *r.recall) > 0.0) {
        r.f1 = 2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
    }
    return r;
}

std::string metric_csv_header() {
    return "dataset,classifier,accuracy,recall,specificity,precision,npv,fpr,fnr,f1";
}

namespace {

std::string cell(const std::optional<double>& v) {
    if (!v) return "undefined";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", *v);
    return buf;
}

}  // namespace

std::string metric_csv_row(const std::string& dataset, const std::string& classifier,
                           const MetricReport& r) {
    std::string row = dataset + "," + classifier;
    for (const auto& v : {r.accuracy, r.recall, r.specificity, r.precision, r.npv, r.fpr, r.fnr, r.f1}) {
        row += "," + cell(v);
    }
    return row;
}

const char* classifier_name(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::NaiveBayes: return "NB";
        case ClassifierKind::LogisticRegression: return "LR";
        case ClassifierKind::DecisionTree: return "DT";
        case ClassifierKind::SoftVote: return "SV";
    }
    return "?";
}

Predictor make_predictor(ClassifierKind kind, const EnsembleModel& model) {
    switch (kind) {
        case ClassifierKind::NaiveBayes:
            return [m = model.nb](const CurrentState& cs) { return predict_nb(m, cs); };
        case ClassifierKind::LogisticRegression:
            return [m = model.lr](const CurrentState& cs) { return predict_lr(m, cs); };
        case ClassifierKind::DecisionTree:
            return [m = model.dt](const CurrentState& cs) { return predict_dt(m, cs); };
        case ClassifierKind::SoftVote:
            return [m = model](const CurrentState& cs) { return predict_ensemble(m, cs); };
    }
    throw std::invalid_argument("unknown classifier kind");
}

double k_fold_cv(const std::vector<Record>& pool, int k, ClassifierKind kind, Rng& rng) {
    const int n = static_cast<int>(pool.size());
    if (k < 2) throw std::invalid_argument("k_fold_cv: k must be >= 2");
    if (n < k) throw std::invalid_argument("k_fold_cv: fold smaller than one record");

    // One seeded shuffle, then contiguous blocks as folds.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }

    double accuracy_sum = 0.0;
    for (int fold = 0; fold < k; ++fold) {
        const int lo = static_cast<int>(static_cast<long>(fold) * n / k);
        const int hi = static_cast<int>(static_cast<long>(fold + 1) * n / k);
        std::vector<Record> train, held;
        train.reserve(n - (hi - lo));
        held.reserve(hi - lo);
        for (int i = 0; i < n; ++i) {
            (i >= lo && i < hi ? held : train).push_back(pool[order[i]]);
        }
        const EnsembleModel model = train_ensemble(train);
        const Predictor predict = make_predictor(kind, model);
        int correct = 0;
        for (const auto& r : held) {
            const bool positive = predict(r.state()) >= 0.5;
            correct += (positive == (r.stroke == 1)) ? 1 : 0;
        }
        accuracy_sum += 100.0 * correct / held.size();
    }
    return accuracy_sum / k;
}

}  // namespace hetsim::ml
