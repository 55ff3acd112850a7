#include "hetsim/ml/dataset.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hetsim::ml {

namespace {

constexpr const char* kFeatureCsvNames[kNumFeatures] = {
    "total_cholesterol",
    "systolic_bp",
    "diastolic_bp",
    "smoking_rate",
};

constexpr const char* kLevelNames[kNumFeatures][kLevelsPerFeature] = {
    {"Optimal", "Normal", "High"},
    {"Normal", "Pre-hypertension", "High Hypertension"},
    {"Normal", "Pre-hypertension", "High Hypertension"},
    {"Light", "Moderate", "Heavy"},
};

}  // namespace

const char* feature_csv_name(Feature f) { return kFeatureCsvNames[static_cast<int>(f)]; }

const char* level_name(Feature f, int level) { return kLevelNames[static_cast<int>(f)][level]; }

int parse_level(Feature f, std::string_view name) {
    for (int l = 0; l < kLevelsPerFeature; ++l) {
        if (name == kLevelNames[static_cast<int>(f)][l]) return l;
    }
    throw ConfigError("unknown level '" + std::string(name) + "' for feature " +
                      kFeatureCsvNames[static_cast<int>(f)]);
}

FeatureLevel discretize(Feature f, double raw) {
    if (raw < 0.0) throw std::invalid_argument("discretize: negative reading");
    int level = 0;
    switch (f) {
        case Feature::TotalCholesterol:
            level = raw < 200.0 ? 0 : (raw < 240.0 ? 1 : 2);
            break;
        case Feature::SystolicBP:
            level = raw < 120.0 ? 0 : (raw < 140.0 ? 1 : 2);
            break;
        case Feature::DiastolicBP:
            level = raw < 80.0 ? 0 : (raw < 90.0 ? 1 : 2);
            break;
        case Feature::SmokingRate:
            level = raw <= 10.0 ? 0 : (raw < 20.0 ? 1 : 2);
            break;
    }
    return FeatureLevel{f, level};
}

std::vector<Record> PatientDataset::all_records() const {
    std::vector<Record> all = records;
    all.insert(all.end(), test_records.begin(), test_records.end());
    return all;
}

SyntheticProfile SyntheticProfile::planted_separation() {
    SyntheticProfile p;
    p.p_stroke = 0.45;
    for (int f = 0; f < kNumFeatures; ++f) {
        p.level_probs[f][0] = {0.65, 0.25, 0.10};  // no-stroke days sit low
        p.level_probs[f][1] = {0.15, 0.30, 0.55};  // stroke days skew high
    }
    return p;
}

void SyntheticProfile::validate() const {
    if (!(p_stroke > 0.0) || !(p_stroke < 1.0)) {
        throw ConfigError("synthetic profile: p_stroke must lie strictly in (0, 1)");
    }
    for (int f = 0; f < kNumFeatures; ++f) {
        for (int c = 0; c < kNumClasses; ++c) {
            double sum = 0.0;
            for (int l = 0; l < kLevelsPerFeature; ++l) {
                const double p = level_probs[f][c][l];
                if (p < 0.0) throw ConfigError("synthetic profile: negative level probability");
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-9) {
                throw ConfigError("synthetic profile: level probabilities must sum to 1");
            }
        }
    }
}

namespace {

int draw_level(const std::array<double, kLevelsPerFeature>& probs, Rng& rng) {
    const double u = rng.next_double();
    double acc = 0.0;
    for (int l = 0; l < kLevelsPerFeature; ++l) {
        acc += probs[l];
        if (u < acc) return l;
    }
    return kLevelsPerFeature - 1;
}

}  // namespace

PatientDataset generate_synthetic_dataset(const SyntheticProfile& profile, int op_id, Rng& rng,
                                          int n_train, int n_test) {
    profile.validate();
    if (n_train < 1 || n_test < 0) throw ConfigError("dataset sizes must be positive");

    PatientDataset ds;
    ds.op_id = op_id;
    for (int i = 0; i < n_train + n_test; ++i) {
        Record r;
        r.stroke = rng.next_double() < profile.p_stroke ? 1 : 0;
        for (int f = 0; f < kNumFeatures; ++f) {
            r.levels[f] = draw_level(profile.level_probs[f][r.stroke], rng);
        }
        (i < n_train ? ds.records : ds.test_records).push_back(r);
    }

    int n_pos = 0;
    for (const auto& r : ds.records) n_pos += r.stroke;
    if (n_pos == 0 || n_pos == static_cast<int>(ds.records.size())) {
        throw ConfigError("synthetic draw produced a single-class training split; "
                          "profile too degenerate for this size");
    }
    return ds;
}

PatientDataset load_dataset_csv(const std::string& path, int op_id, int n_train) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open dataset: " + path);

    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty dataset file: " + path);

    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        return cells;
    };

    const std::string expected = "day,total_cholesterol,systolic_bp,diastolic_bp,smoking_rate,stroke";
    if (line != expected) {
        throw ConfigError("dataset header mismatch in " + path + " (expected '" + expected + "')");
    }

    PatientDataset ds;
    ds.op_id = op_id;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() != 6) {
            throw ConfigError("dataset row " + std::to_string(row + 2) + " has " +
                              std::to_string(cells.size()) + " cells, expected 6");
        }
        Record r;
        for (int f = 0; f < kNumFeatures; ++f) {
            r.levels[f] = parse_level(static_cast<Feature>(f), cells[f + 1]);
        }
        if (cells[5] != "0" && cells[5] != "1") {
            throw ConfigError("dataset row " + std::to_string(row + 2) + ": stroke must be 0 or 1");
        }
        r.stroke = cells[5] == "1" ? 1 : 0;
        (row < n_train ? ds.records : ds.test_records).push_back(r);
        ++row;
    }
    if (ds.records.empty()) throw ConfigError("dataset has no training rows: " + path);
    return ds;
}

void save_dataset_csv(const PatientDataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write dataset: " + path);
    out << "day,total_cholesterol,systolic_bp,diastolic_bp,smoking_rate,stroke\n";
    int day = 1;
    auto emit = [&](const Record& r) {
        out << day++;
        for (int f = 0; f < kNumFeatures; ++f) {
            out << ',' << level_name(static_cast<Feature>(f), r.levels[f]);
        }
        out << ',' << r.stroke << '\n';
    };
    for (const auto& r : ds.records) emit(r);
    for (const auto& r : ds.test_records) emit(r);
}

}  // namespace hetsim::ml
