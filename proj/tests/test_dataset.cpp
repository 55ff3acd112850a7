#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "hetsim/ml/dataset.hpp"

using namespace hetsim;
using namespace hetsim::ml;

TEST_CASE("discretization follows the clinical ranges") {
    CHECK(discretize(Feature::TotalCholesterol, 250.0).level == 2);  // High
    CHECK(discretize(Feature::TotalCholesterol, 199.9).level == 0);  // Optimal
    CHECK(discretize(Feature::TotalCholesterol, 200.0).level == 1);  // Normal
    CHECK(discretize(Feature::SystolicBP, 119.0).level == 0);        // Normal
    CHECK(discretize(Feature::SystolicBP, 120.0).level == 1);
    CHECK(discretize(Feature::SystolicBP, 140.0).level == 2);
    CHECK(discretize(Feature::DiastolicBP, 79.0).level == 0);
    CHECK(discretize(Feature::DiastolicBP, 85.0).level == 1);
    CHECK(discretize(Feature::DiastolicBP, 95.0).level == 2);
    CHECK(discretize(Feature::SmokingRate, 10.0).level == 0);  // Light
    CHECK(discretize(Feature::SmokingRate, 11.0).level == 1);  // Moderate
    CHECK(discretize(Feature::SmokingRate, 20.0).level == 2);  // Heavy
    CHECK_THROWS_AS(discretize(Feature::SmokingRate, -1.0), std::invalid_argument);
}

TEST_CASE("level names parse back to their indices") {
    for (int f = 0; f < kNumFeatures; ++f) {
        for (int l = 0; l < kLevelsPerFeature; ++l) {
            const auto feature = static_cast<Feature>(f);
            CHECK(parse_level(feature, level_name(feature, l)) == l);
        }
    }
    CHECK_THROWS_AS(parse_level(Feature::TotalCholesterol, "Heavy"), ConfigError);
}

TEST_CASE("synthetic generator: sizes, determinism, both classes") {
    const auto profile = SyntheticProfile::planted_separation();
    Rng r1(3), r2(3), r3(4);
    const PatientDataset a = generate_synthetic_dataset(profile, 1, r1);
    const PatientDataset b = generate_synthetic_dataset(profile, 1, r2);
    const PatientDataset c = generate_synthetic_dataset(profile, 1, r3);

    CHECK(a.records.size() == 140);
    CHECK(a.test_records.size() == 60);
    CHECK(a.all_records().size() == 200);

    auto levels_equal = [](const PatientDataset& x, const PatientDataset& y) {
        if (x.records.size() != y.records.size()) return false;
        for (std::size_t i = 0; i < x.records.size(); ++i) {
            if (x.records[i].levels != y.records[i].levels ||
                x.records[i].stroke != y.records[i].stroke) {
                return false;
            }
        }
        return true;
    };
    CHECK(levels_equal(a, b));
    CHECK(!levels_equal(a, c));

    int positives = 0;
    for (const auto& r : a.records) positives += r.stroke;
    CHECK(positives > 0);
    CHECK(positives < static_cast<int>(a.records.size()));
}

TEST_CASE("degenerate profiles are rejected") {
    auto profile = SyntheticProfile::planted_separation();
    profile.p_stroke = 0.0;  // one class impossible
    Rng rng(1);
    CHECK_THROWS_AS(generate_synthetic_dataset(profile, 1, rng), ConfigError);

    profile = SyntheticProfile::planted_separation();
    profile.level_probs[0][0] = {0.5, 0.4, 0.2};  // does not sum to 1
    CHECK_THROWS_AS(generate_synthetic_dataset(profile, 1, rng), ConfigError);
}

TEST_CASE("dataset CSV round trip and validation") {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string path = (dir / "hetsim_ds.csv").string();
    Rng rng(17);
    const PatientDataset ds =
        generate_synthetic_dataset(SyntheticProfile::planted_separation(), 2, rng);
    save_dataset_csv(ds, path);
    const PatientDataset back = load_dataset_csv(path, 2);
    REQUIRE(back.records.size() == ds.records.size());
    REQUIRE(back.test_records.size() == ds.test_records.size());
    for (std::size_t i = 0; i < ds.records.size(); ++i) {
        CHECK(back.records[i].levels == ds.records[i].levels);
        CHECK(back.records[i].stroke == ds.records[i].stroke);
    }
    std::filesystem::remove(path);

    const std::string bad = (dir / "hetsim_bad.csv").string();
    {
        std::ofstream out(bad);
        out << "day,total_cholesterol,systolic_bp,diastolic_bp,smoking_rate,stroke\n";
        out << "1,NotALevel,Normal,Normal,Light,0\n";
    }
    CHECK_THROWS_AS(load_dataset_csv(bad), ConfigError);
    {
        std::ofstream out(bad);
        out << "wrong,header\n";
    }
    CHECK_THROWS_AS(load_dataset_csv(bad), ConfigError);
    std::filesystem::remove(bad);
}
