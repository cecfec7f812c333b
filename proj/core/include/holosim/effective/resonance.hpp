#pragma once

namespace holosim::eff {

// Two-tone base frequencies meeting the sideband resonance conditions
//   (Delta_pair + alpha_other) - (w_eps1 + w_eps2) = Delta
//   -(Delta_pair - alpha_mod - w_eps1)             = Delta
// for a common small detuning Delta. Frequencies are signed; a negative
// value selects the lower sideband (the modulated transmon sits below its
// partner).
struct ResonanceAssignment {
  double w_eps1_mhz = 0.0;
  double w_eps2_mhz = 0.0;
  double detuning_mhz = 0.0;

  bool detuning_is_small() const;  // |Delta| <= 0.1 * min |w_eps|
};

ResonanceAssignment solve_resonance(double pair_detuning_mhz, double alpha_mod_mhz,
                                    double alpha_other_mhz, double detuning_mhz);

}  // namespace holosim::eff
