#pragma once

#include <stdexcept>
#include <string>

namespace holosim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite or otherwise malformed numeric input.
struct InvalidInputError : Error {
  using Error::Error;
};

// Device description cannot host the requested construction
// (e.g. truncation too small for the encoding).
struct InvalidDeviceError : Error {
  using Error::Error;
};

// Root bracket does not contain a sign change.
struct BracketingError : Error {
  using Error::Error;
};

// NaN or norm blow-up during propagation; carries the offending time.
struct NumericalBlowupError : Error {
  NumericalBlowupError(const std::string& what, double t_ns)
      : Error(what + " at t=" + std::to_string(t_ns) + " ns"), time_ns(t_ns) {}
  double time_ns;
};

// Step size too coarse: conserved quantity drifted past tolerance.
struct StepSizeError : Error {
  using Error::Error;
};

// No admissible gate design for the requested parameters.
struct DesignInfeasibleError : Error {
  using Error::Error;
};

// Resonance assignment produces unusable tone frequencies.
struct InfeasibleResonanceError : Error {
  using Error::Error;
};

// Requested configuration is outside what the scheme supports.
struct UnsupportedConfigurationError : Error {
  using Error::Error;
};

// Scenario configuration parse/validation failure.
struct ConfigError : Error {
  using Error::Error;
};

// Scenario execution failure.
struct SimulationError : Error {
  using Error::Error;
};

}  // namespace holosim
