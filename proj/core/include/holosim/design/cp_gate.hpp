#pragma once

#include <array>

#include "holosim/device/transmon.hpp"
#include "holosim/effective/three_level.hpp"
#include "holosim/numerics/matrix.hpp"

namespace holosim::design {

// Control-phase gate design on the active middle pair of a two-logical-
// qubit register. Simultaneously satisfies (angular)
//   eta2 * tau2                                    = 2 (pi - gamma2)
//   tau2 * sqrt(g'^2 + ((Delta' + eta2)/2)^2)      = pi     (computational loop)
//   tau2 * sqrt(3 g'^2 + ((Delta' + a_mod - a_oth + eta2)/2)^2) = 2 pi
//                                                  (leakage-ladder cyclicity)
struct CpGateDesign {
  double gamma2 = 0.0;
  double beta3 = 0.0;
  double delta_prime_mhz = 0.0;  // Delta'
  double eta2_mhz = 0.0;
  double tau2_ns = 0.0;
  double g_prime_mhz = 0.0;
  double tau0_ns = 0.0;  // pi/(2*pi*g')
  double alpha_mod_mhz = 0.0;
  double alpha_other_mhz = 0.0;
  double w_eps3_mhz = 0.0;  // tone base frequencies (signed)
  double w_eps4_mhz = 0.0;

  std::array<double, 3> residuals{};  // the three conditions, angular

  std::array<dev::DriveTone, 2> tones() const;
  eff::EffectiveThreeLevel effective_model() const;

  // Ladder detuning Delta' + alpha_mod - alpha_other + eta2.
  double ladder_detuning_mhz() const;

  // Reference-frame rotation on {|00L>..|11L>} relating the interaction
  // picture to the dressed bookkeeping:
  //   diag(1, e^{-i 2*pi*D_ladder*tau2/2}, 1, e^{+i 2*pi*Delta'*tau2/2}).
  Eigen::Vector4cd frame_correction_diag() const;
};

// Solve the three design conditions for (tau2, eta2, Delta') by nested
// bracketed root finding; beta4 is held at zero so the dressed mixing
// angle vanishes and only |11L> accumulates phase.
CpGateDesign design_cp_gate(double gamma2, const dev::DrivenPair& device, double beta3,
                            double alpha2_mhz, double alpha3_mhz);

}  // namespace holosim::design
