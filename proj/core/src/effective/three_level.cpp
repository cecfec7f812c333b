#include "holosim/effective/three_level.hpp"

#include <cmath>

#include "holosim/errors.hpp"
#include "holosim/units.hpp"

namespace holosim::eff {

using num::CMatrix;
using num::Complex;

double EffectiveThreeLevel::g_mhz() const { return std::hypot(g1_mhz, g2_mhz); }

void effective_hamiltonian_1q(const EffectiveThreeLevel& model, double t_ns,
                              CMatrix& h) {
  h.setZero(3, 3);
  const double half_delta = 0.5 * mhz_to_angular(model.detuning_mhz);
  h(0, 0) = -half_delta;
  h(2, 2) = half_delta;

  const double g = mhz_to_angular(model.g_mhz()) * (1.0 + model.coupling_error);
  const double phi2 = mhz_to_angular(model.chirp_mhz) * t_ns + model.phi20;
  const Complex c = g * std::exp(Complex(0.0, -phi2));
  h(0, 2) += c;
  h(2, 0) += std::conj(c);

  if (model.drift_diff_mhz != 0.0) {
    // sigma_z on the logical states, rotated into the dressed frame.
    const double dd = mhz_to_angular(model.drift_diff_mhz);
    const DressedFrame f = model.frame();
    const auto p = f.psi_plus();
    const auto m = f.psi_minus();
    // <x| (|1L><1L| - |0L><0L|) |y> for x,y in {psi+, psi-}
    auto zel = [&](const Eigen::Vector2cd& x, const Eigen::Vector2cd& y) {
      return std::conj(x(1)) * y(1) - std::conj(x(0)) * y(0);
    };
    h(0, 0) += dd * zel(p, p);
    h(0, 1) += dd * zel(p, m);
    h(1, 0) += dd * zel(m, p);
    h(1, 1) += dd * zel(m, m);
  }
}

CMatrix effective_hamiltonian_1q(const EffectiveThreeLevel& model, double t_ns) {
  CMatrix h;
  effective_hamiltonian_1q(model, t_ns, h);
  return h;
}

CMatrix leakage_hamiltonian_2q(const EffectiveThreeLevel& model, double alpha_mod_mhz,
                               double alpha_other_mhz, double /*t_ns*/) {
  if (model.g1_mhz != 0.0)
    throw UnsupportedConfigurationError(
        "leakage_hamiltonian_2q: two-tone channel must be closed (beta4 = 0)");
  CMatrix h = CMatrix::Zero(3, 3);  // basis {|13>, |22>, |31>}
  const double ladder =
      0.5 * mhz_to_angular(model.detuning_mhz + alpha_mod_mhz - alpha_other_mhz +
                           model.chirp_mhz);
  h(0, 0) = -ladder;
  h(1, 1) = ladder;
  const double g3 = mhz_to_angular(std::sqrt(3.0) * model.g2_mhz);
  h(0, 1) = g3;
  h(1, 0) = g3;
  // |31> leg carries sqrt(3)*g4 which the scheme keeps at zero.
  return h;
}

}  // namespace holosim::eff
