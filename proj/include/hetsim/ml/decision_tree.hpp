#pragma once

#include <optional>

#include "hetsim/ml/dataset.hpp"

namespace hetsim::ml {

struct ClassCounts {
    std::array<int, kNumClasses> n{};
    int total() const { return n[0] + n[1]; }
};

/// Gini impurity 1 - sum p_i^2. Throws std::invalid_argument on an empty
/// subset.
double gini(const ClassCounts& counts);

/// Canonical binary level partitions of an n_levels-valued feature: all
/// nonempty proper subsets, deduplicated by complement symmetry (the kept
/// representative is the lexicographically smaller side). For 3 levels this
/// is exactly 3 partitions.
std::vector<unsigned> canonical_partitions(int n_levels);

struct SplitResult {
    unsigned subset_mask = 0;  // levels routed to the left child
    double weighted_gini = 0.0;
    double gain = 0.0;  // parent gini minus weighted child gini
};

/// Best binary split of `records` on feature `f`: minimizes the weighted
/// child impurity over the canonical partitions. Ties go to the
/// lexicographically smallest subset. Returns nullopt on a pure node.
/// min_leaf > 1 restricts to splits leaving at least that many records in
/// each child (and may therefore also return nullopt).
std::optional<SplitResult> best_split(const std::vector<Record>& records, Feature f,
                                      int min_leaf = 1);

struct DtNode {
    bool is_leaf = true;
    Feature feature = Feature::TotalCholesterol;
    unsigned subset_mask = 0;  // current state level in subset -> left child
    int left = -1;
    int right = -1;
    ClassCounts counts;  // training records that reached this node
};

struct DtModel {
    std::vector<DtNode> nodes;  // nodes[0] is the root

    int leaf_for(const CurrentState& cs) const;
};

struct DtParams {
    int max_depth = 6;
    int min_leaf = 5;
};

/// Recursive growth by best Gini split across features. A node becomes a
/// leaf on purity, zero gain, the depth cap, or when no split satisfies the
/// min_leaf rule. Ties between equal-gain features break toward the lowest
/// feature index. Throws TrainError on an empty dataset.
DtModel train_dt(const std::vector<Record>& train, const DtParams& params = {});

/// Leaf class-1 probability with add-one smoothing:
/// (count_1 + 1) / (total + 2).
double predict_dt(const DtModel& m, const CurrentState& cs);

}  // namespace hetsim::ml
