#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hetsim/ml/ensemble.hpp"

namespace hetsim::ml {

struct ConfusionCounts {
    int tp = 0;
    int tn = 0;
    int fp = 0;
    int fn = 0;

    int total() const { return tp + tn + fp + fn; }
};

using Predictor = std::function<double(const CurrentState&)>;

/// Counts the four outcomes of thresholded predictions over a test set.
/// A prediction is positive when p >= threshold. Throws
/// std::invalid_argument for an empty test set or a threshold outside (0, 1).
ConfusionCounts confusion(const Predictor& predict, const std::vector<Record>& test,
                          double threshold = 0.5);

/// All values are percentages (F1 included, matching the reported scale).
/// A metric whose denominator is zero is left unset rather than forced to
/// 0 or 100.
struct MetricReport {
    std::optional<double> accuracy;
    std::optional<double> recall;
    std::optional<double> specificity;
    std::optional<double> precision;
    std::optional<double> npv;
    std::optional<double> fpr;
    std::optional<double> fnr;
    std::optional<double> f1;
};

MetricReport metrics(const ConfusionCounts& c);

/// One CSV row per (dataset, classifier) in the reported column order:
/// dataset,classifier,accuracy,recall,specificity,precision,npv,fpr,fnr,f1.
/// Unset metrics print as "undefined".
std::string metric_csv_header();
std::string metric_csv_row(const std::string& dataset, const std::string& classifier,
                           const MetricReport& r);

enum class ClassifierKind { NaiveBayes, LogisticRegression, DecisionTree, SoftVote };

const char* classifier_name(ClassifierKind kind);

Predictor make_predictor(ClassifierKind kind, const EnsembleModel& model);

/// Mean accuracy (percent) of k-fold cross-validation: one seeded shuffle,
/// contiguous folds, train on k-1 folds and score the held-out fold at the
/// 0.5 threshold. Throws std::invalid_argument when k < 2 or a fold would
/// be empty.
double k_fold_cv(const std::vector<Record>& pool, int k, ClassifierKind kind, Rng& rng);

}  // namespace hetsim::ml
