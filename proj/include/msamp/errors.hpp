#pragma once

#include <stdexcept>

namespace msamp {

// Scenario or command-line configuration problems. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Corrupt or truncated model/dataset streams. CLI exit code 2.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The constraint scenario rejects (almost) every sample. CLI exit code 3.
struct InfeasibleScenario : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite losses while training the adversarial pair. CLI exit code 4.
struct TrainingDiverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace msamp
