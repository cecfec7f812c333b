#pragma once

#include <utility>

namespace holosim::eff {

// Effective sideband coupling strengths of the two resonant processes
// (linear MHz):
//   g1 = sqrt(2) g_c J1(beta1) J1(beta2)   two-tone channel, |0L> <-> |a>
//   g2 = sqrt(2) g_c J1(beta1) J0(beta2)   single-tone channel, |a> <-> |1L>
struct EffectiveCouplings {
  double g1_mhz = 0.0;
  double g2_mhz = 0.0;
  double magnitude_mhz() const;  // sqrt(g1^2 + g2^2)
  double mixing_angle() const;   // theta = 2 atan(g2/g1); pi when g1 == 0
};

EffectiveCouplings effective_couplings(double coupling_mhz, double beta1, double beta2);

// Solve J0(beta2)/J1(beta2) = tan(theta/2) for beta2 on (0, 2.4);
// theta = pi closes the two-tone channel and returns beta2 = 0.
double solve_beta_for_theta(double theta_target, double beta1);

}  // namespace holosim::eff
