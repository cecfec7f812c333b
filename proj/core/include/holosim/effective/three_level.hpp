#pragma once

#include "holosim/effective/dressed.hpp"
#include "holosim/numerics/matrix.hpp"

namespace holosim::eff {

// Reduced three-level description of one driven pair after the
// sideband/rotating-wave reduction. Frequencies linear MHz, angles rad.
struct EffectiveThreeLevel {
  double g1_mhz = 0.0;       // |0L> <-> |a| channel
  double g2_mhz = 0.0;       // |a> <-> |1L> channel
  double theta = 0.0;        // 2 atan(g2/g1)
  double phi = 0.0;          // relative channel phase
  double detuning_mhz = 0.0; // Delta
  double chirp_mhz = 0.0;    // eta = d(phi2)/dt / 2pi
  double phi20 = 0.0;        // coupling phase at t = 0
  double drift_diff_mhz = 0.0;   // delta_d error term
  double coupling_error = 0.0;   // epsilon_g, multiplies g

  double g_mhz() const;  // sqrt(g1^2 + g2^2)
  DressedFrame frame() const { return DressedFrame{theta, phi}; }
};

// 3x3 generator on {|psi+>, |psi->, |a>} (rad/ns):
//   H = -pi*Delta * sigma_z(psi+, a)
//       + 2*pi*g (1+eps_g) ( e^{-i(2*pi*eta*t + phi20)} |psi+><a| + h.c. )
//       + 2*pi*delta_d ( |1L><1L| - |0L><0L| ) expressed in the dressed frame.
num::CMatrix effective_hamiltonian_1q(const EffectiveThreeLevel& model, double t_ns);

void effective_hamiltonian_1q(const EffectiveThreeLevel& model, double t_ns,
                              num::CMatrix& out);

// Rotating-frame generator of the non-computational ladder
// {|13>, |22>, |31>} (rad/ns): couplings sqrt(3)g2, sqrt(3)g1 and ladder
// detuning (Delta + alpha_mod - alpha_other + eta)/2 on |22> vs |13>.
// The control-phase scheme closes the |31> leg (two-tone channel off),
// so the model must carry g1 == 0.
num::CMatrix leakage_hamiltonian_2q(const EffectiveThreeLevel& model,
                                    double alpha_mod_mhz, double alpha_other_mhz,
                                    double t_ns);

}  // namespace holosim::eff
