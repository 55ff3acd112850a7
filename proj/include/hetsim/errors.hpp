#pragma once

#include <stdexcept>
#include <string>

namespace hetsim {

/// Invalid or impossible configuration (scenario files, synthetic profiles).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Classifier training could not proceed (e.g. empty dataset).
struct TrainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A solved program violates an internal consistency check (bad big-M,
/// fractional binaries at an "integral" point, SINR cross-check failure).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hetsim
