#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hetsim/errors.hpp"
#include "hetsim/rng.hpp"

namespace hetsim::ml {

inline constexpr int kNumFeatures = 4;
inline constexpr int kLevelsPerFeature = 3;
inline constexpr int kNumClasses = 2;

enum class Feature : int {
    TotalCholesterol = 0,
    SystolicBP = 1,
    DiastolicBP = 2,
    SmokingRate = 3,
};

struct FeatureLevel {
    Feature feature;
    int level;  // 0..2, ordered as in the clinical range tables
};

const char* feature_csv_name(Feature f);
const char* level_name(Feature f, int level);
/// Throws ConfigError for a name that is not a level of this feature.
int parse_level(Feature f, std::string_view name);

/// Numeric reading -> discrete level:
///   cholesterol (mg/dl): <200 Optimal, 200-239 Normal, 240+ High
///   systolic (mmHg): <120 Normal, 120-139 Pre-hypertension, 140+ High Hypertension
///   diastolic (mmHg): <80 Normal, 80-89 Pre-hypertension, 90+ High Hypertension
///   smoking (cig/day): <=10 Light, 11-19 Moderate, 20+ Heavy
/// Throws std::invalid_argument for negative readings.
FeatureLevel discretize(Feature f, double raw);

struct CurrentState {
    std::array<int, kNumFeatures> levels{};  // index = feature
};

struct Record {
    std::array<int, kNumFeatures> levels{};
    int stroke = 0;  // class flag, 0 or 1

    CurrentState state() const { return CurrentState{levels}; }
};

struct PatientDataset {
    int op_id = 0;
    std::vector<Record> records;       // training split
    std::vector<Record> test_records;  // held-out split

    std::vector<Record> all_records() const;
};

/// Class-conditional level distributions driving the synthetic generator.
struct SyntheticProfile {
    double p_stroke = 0.45;
    // [feature][class][level] -> probability; rows sum to 1
    std::array<std::array<std::array<double, kLevelsPerFeature>, kNumClasses>, kNumFeatures>
        level_probs{};

    /// Moderately separated classes: risk levels skew high under stroke=1.
    static SyntheticProfile planted_separation();

    void validate() const;  // throws ConfigError on degenerate profiles
};

/// Draws n_train + n_test records (defaults 140/60) and splits them in draw
/// order. Deterministic under the rng seed. Throws ConfigError if the
/// training split ends up single-class.
PatientDataset generate_synthetic_dataset(const SyntheticProfile& profile, int op_id, Rng& rng,
                                          int n_train = 140, int n_test = 60);

/// CSV with header day,total_cholesterol,systolic_bp,diastolic_bp,smoking_rate,stroke.
/// Level cells hold the exact level names; stroke is 0/1. The first n_train
/// rows become the training split.
PatientDataset load_dataset_csv(const std::string& path, int op_id = 0, int n_train = 140);
void save_dataset_csv(const PatientDataset& ds, const std::string& path);

}  // namespace hetsim::ml
