#include "holosim/effective/resonance.hpp"

#include <cmath>

#include "holosim/errors.hpp"

namespace holosim::eff {

bool ResonanceAssignment::detuning_is_small() const {
  const double wmin = std::min(std::abs(w_eps1_mhz), std::abs(w_eps2_mhz));
  return std::abs(detuning_mhz) <= 0.1 * wmin;
}

ResonanceAssignment solve_resonance(double pair_detuning_mhz, double alpha_mod_mhz,
                                    double alpha_other_mhz, double detuning_mhz) {
  if (!std::isfinite(pair_detuning_mhz) || !std::isfinite(alpha_mod_mhz) ||
      !std::isfinite(alpha_other_mhz) || !std::isfinite(detuning_mhz))
    throw InvalidInputError("solve_resonance: non-finite input");

  ResonanceAssignment r;
  r.w_eps1_mhz = pair_detuning_mhz - alpha_mod_mhz + detuning_mhz;
  r.w_eps2_mhz = alpha_mod_mhz + alpha_other_mhz - 2.0 * detuning_mhz;
  r.detuning_mhz = detuning_mhz;
  if (r.w_eps1_mhz == 0.0 || r.w_eps2_mhz == 0.0)
    throw InfeasibleResonanceError("solve_resonance: tone frequency is zero");
  return r;
}

}  // namespace holosim::eff
