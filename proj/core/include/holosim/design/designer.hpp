#pragma once

#include "holosim/design/schedule.hpp"

namespace holosim::design {

struct CalibrationResult {
  bool performed = false;
  double omega_ratio = 1.0;  // measured / designed precession rate
  double g_scale = 1.0;      // coupling rescale folded into the schedule
};

struct DesignOptions {
  // When set, probe the full model once per design iteration and fold the
  // measured precession rate back into the effective coupling before
  // re-solving the loop. Mismatch beyond 1% is rejected.
  bool calibrate = false;
  int calibration_iterations = 2;
  double probe_dt_ns = 1e-3;
};

// Time-optimal schedule for an arbitrary holonomic gate on a driven pair:
// beta2 from the mixing angle, tone frequencies from the resonance
// conditions, chirp offsets (+eta, -2*eta) realizing the linear coupling
// phase, static phases pinning phi and phi20 = pi.
PulseSchedule design_single_qubit_gate(const SingleQubitGateSpec& spec,
                                       const dev::DrivenPair& device,
                                       double detuning_mhz, double beta1,
                                       const DesignOptions& options = {},
                                       CalibrationResult* calibration = nullptr);

// Conventional single-loop baseline: two equal resonant segments of
// combined duration tau0 = pi/(2*pi*g), with the coupling phase jumped by
// pi - gamma between them. Same target unitary, duration independent of
// the rotation angle.
PulseSchedule design_conventional_gate(const SingleQubitGateSpec& spec,
                                       const dev::DrivenPair& device, double g_mhz);

// beta1 selection policy when no override is given: maximize the composite
// coupling subject to the sideband-validity bound g <= min(|w_eps|)/10.
double choose_beta1(const dev::DrivenPair& device, double detuning_mhz, double theta);

}  // namespace holosim::design
