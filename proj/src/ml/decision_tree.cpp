#include "hetsim/ml/decision_tree.hpp"

#include <stdexcept>

namespace hetsim::ml {

double gini(const ClassCounts& counts) {
    const int total = counts.total();
    if (total <= 0) throw std::invalid_argument("gini: empty subset");
    double sum_sq = 0.0;
    for (int c = 0; c < kNumClasses; ++c) {
        const double p = static_cast<double>(counts.n[c]) / total;
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

namespace {

// Lexicographic order on the sorted level lists the masks denote:
// {0} < {0,1} < {0,2} < {1} < {1,2} < {2}.
bool mask_lex_less(unsigned a, unsigned b, int n_levels) {
    for (int l = 0; l < n_levels; ++l) {
        const bool in_a = (a >> l) & 1u;
        const bool in_b = (b >> l) & 1u;
        if (in_a != in_b) return in_a;  // the one containing the smaller level comes first
    }
    return false;
}

}  // namespace

std::vector<unsigned> canonical_partitions(int n_levels) {
    const unsigned full = (1u << n_levels) - 1u;
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < full; ++m) {
        const unsigned comp = full & ~m;
        const unsigned rep = mask_lex_less(m, comp, n_levels) ? m : comp;
        if (rep == m) masks.push_back(m);
    }
    return masks;
}

std::optional<SplitResult> best_split(const std::vector<Record>& records, Feature f,
                                      int min_leaf) {
    ClassCounts parent;
    for (const auto& r : records) parent.n[r.stroke] += 1;
    if (parent.n[0] == 0 || parent.n[1] == 0) return std::nullopt;  // pure node

    const double parent_gini = gini(parent);
    const int fi = static_cast<int>(f);

    // Per-level class counts; a subset's counts are sums over its levels.
    ClassCounts by_level[kLevelsPerFeature];
    for (const auto& r : records) by_level[r.levels[fi]].n[r.stroke] += 1;

    std::optional<SplitResult> best;
    for (unsigned mask : canonical_partitions(kLevelsPerFeature)) {
        ClassCounts left, right;
        for (int l = 0; l < kLevelsPerFeature; ++l) {
            for (int c = 0; c < kNumClasses; ++c) {
                ((mask >> l) & 1u ? left : right).n[c] += by_level[l].n[c];
            }
        }
        if (left.total() < min_leaf || right.total() < min_leaf) continue;
        const double weighted =
            (left.total() * gini(left) + right.total() * gini(right)) / parent.total();
        if (!best || weighted < best->weighted_gini - 1e-12 ||
            (weighted < best->weighted_gini + 1e-12 &&
             mask_lex_less(mask, best->subset_mask, kLevelsPerFeature))) {
            best = SplitResult{mask, weighted, parent_gini - weighted};
        }
    }
    return best;
}

namespace {

int grow(DtModel& model, const std::vector<Record>& records, const DtParams& params, int depth) {
    const int node_id = static_cast<int>(model.nodes.size());
    model.nodes.emplace_back();
    for (const auto& r : records) model.nodes[node_id].counts.n[r.stroke] += 1;

    const ClassCounts& counts = model.nodes[node_id].counts;
    if (depth >= params.max_depth || counts.n[0] == 0 || counts.n[1] == 0) {
        return node_id;
    }

    // Best split across features: highest gain, then lowest feature index,
    // then lexicographically smallest subset (handled inside best_split).
    std::optional<SplitResult> chosen;
    Feature chosen_feature = Feature::TotalCholesterol;
    for (int f = 0; f < kNumFeatures; ++f) {
        auto split = best_split(records, static_cast<Feature>(f), params.min_leaf);
        if (split && split->gain > 1e-12 && (!chosen || split->gain > chosen->gain + 1e-12)) {
            chosen = split;
            chosen_feature = static_cast<Feature>(f);
        }
    }
    if (!chosen) return node_id;

    std::vector<Record> left_records, right_records;
    for (const auto& r : records) {
        const bool goes_left = (chosen->subset_mask >> r.levels[static_cast<int>(chosen_feature)]) & 1u;
        (goes_left ? left_records : right_records).push_back(r);
    }

    model.nodes[node_id].is_leaf = false;
    model.nodes[node_id].feature = chosen_feature;
    model.nodes[node_id].subset_mask = chosen->subset_mask;
    const int left = grow(model, left_records, params, depth + 1);
    model.nodes[node_id].left = left;
    const int right = grow(model, right_records, params, depth + 1);
    model.nodes[node_id].right = right;
    return node_id;
}

}  // namespace

int DtModel::leaf_for(const CurrentState& cs) const {
    int node = 0;
    while (!nodes[node].is_leaf) {
        const auto& n = nodes[node];
        const bool goes_left = (n.subset_mask >> cs.levels[static_cast<int>(n.feature)]) & 1u;
        node = goes_left ? n.left : n.right;
    }
    return node;
}

DtModel train_dt(const std::vector<Record>& train, const DtParams& params) {
    if (train.empty()) throw TrainError("train_dt: empty dataset");
    DtModel model;
    grow(model, train, params, 0);
    return model;
}

double predict_dt(const DtModel& m, const CurrentState& cs) {
    const ClassCounts& counts = m.nodes[m.leaf_for(cs)].counts;
    return (counts.n[1] + 1.0) / (counts.total() + 2.0);
}

}  // namespace hetsim::ml
