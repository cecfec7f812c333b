#include "holosim/design/cp_gate.hpp"

#include <cmath>

#include "holosim/design/toc.hpp"
#include "holosim/effective/couplings.hpp"
#include "holosim/effective/resonance.hpp"
#include "holosim/errors.hpp"
#include "holosim/numerics/bessel.hpp"
#include "holosim/numerics/root_find.hpp"
#include "holosim/units.hpp"

namespace holosim::design {

std::array<dev::DriveTone, 2> CpGateDesign::tones() const {
  dev::DriveTone t3{beta3, w_eps3_mhz, eta2_mhz, 0.0};
  dev::DriveTone t4{0.0, w_eps4_mhz, -2.0 * eta2_mhz, 0.0};
  return {t3, t4};
}

eff::EffectiveThreeLevel CpGateDesign::effective_model() const {
  eff::EffectiveThreeLevel m;
  m.g1_mhz = 0.0;  // two-tone channel closed (beta4 = 0)
  m.g2_mhz = g_prime_mhz;
  m.theta = pi;
  m.phi = 0.0;
  m.detuning_mhz = delta_prime_mhz;
  m.chirp_mhz = eta2_mhz;
  m.phi20 = pi;
  return m;
}

double CpGateDesign::ladder_detuning_mhz() const {
  return delta_prime_mhz + alpha_mod_mhz - alpha_other_mhz + eta2_mhz;
}

Eigen::Vector4cd CpGateDesign::frame_correction_diag() const {
  const double half_tau = 0.5 * tau2_ns;
  Eigen::Vector4cd d;
  d(0) = 1.0;
  d(1) = std::exp(num::Complex(0.0, -mhz_to_angular(ladder_detuning_mhz()) * half_tau));
  d(2) = 1.0;
  d(3) = std::exp(num::Complex(0.0, mhz_to_angular(delta_prime_mhz) * half_tau));
  return d;
}

CpGateDesign design_cp_gate(double gamma2, const dev::DrivenPair& device, double beta3,
                            double alpha2_mhz, double alpha3_mhz) {
  if (!(gamma2 > 0.0) || !(gamma2 < 2.0 * pi))
    throw InvalidInputError("design_cp_gate: gamma2 must be in (0, 2*pi)");
  device.validate();

  const double g_prime =
      std::sqrt(2.0) * device.coupling_mhz * num::bessel_jn(1, beta3);
  if (!(g_prime > 0.0))
    throw DesignInfeasibleError("design_cp_gate: vanishing effective coupling");
  const double da = alpha3_mhz - alpha2_mhz;
  const double gp_ang = mhz_to_angular(g_prime);

  // For a trial Delta', (tau2, eta2) follow from the computational-loop
  // pair; the leakage-ladder condition picks Delta'.
  auto loop_solution = [&](double dp) { return solve_toc(gamma2, dp, g_prime); };
  auto ladder_residual = [&](double dp) {
    const TocSolution s = loop_solution(dp);
    const double rate = 0.5 * mhz_to_angular(dp + da + s.eta_mhz);
    return s.tau_ns * std::sqrt(3.0 * gp_ang * gp_ang + rate * rate) - 2.0 * pi;
  };

  const double lo = 1e-3, hi = da;
  if (!(hi > lo) || ladder_residual(lo) * ladder_residual(hi) > 0.0)
    throw DesignInfeasibleError(
        "design_cp_gate: no leakage-cyclic solution with Delta' in (0, alpha3-alpha2]"
        " and eta2 in (0, 4 g')");
  const double dp = num::find_root_bracketed(ladder_residual, lo, hi, 1e-12);
  const TocSolution s = loop_solution(dp);
  if (!(s.eta_mhz > 0.0) || s.eta_mhz >= 4.0 * g_prime)
    throw DesignInfeasibleError("design_cp_gate: chirp outside the search box");

  const auto res = eff::solve_resonance(device.pair_detuning_mhz(), alpha3_mhz,
                                        alpha2_mhz, dp);

  CpGateDesign d;
  d.gamma2 = gamma2;
  d.beta3 = beta3;
  d.delta_prime_mhz = dp;
  d.eta2_mhz = s.eta_mhz;
  d.tau2_ns = s.tau_ns;
  d.g_prime_mhz = g_prime;
  d.tau0_ns = s.tau0_ns;
  d.alpha_mod_mhz = alpha3_mhz;
  d.alpha_other_mhz = alpha2_mhz;
  d.w_eps3_mhz = res.w_eps1_mhz;
  d.w_eps4_mhz = res.w_eps2_mhz;

  d.residuals[0] = mhz_to_angular(d.eta2_mhz) * d.tau2_ns - 2.0 * (pi - gamma2);
  d.residuals[1] =
      d.tau2_ns * std::sqrt(gp_ang * gp_ang +
                            0.25 * std::pow(mhz_to_angular(dp + d.eta2_mhz), 2)) -
      pi;
  d.residuals[2] = ladder_residual(dp);
  return d;
}

}  // namespace holosim::design
