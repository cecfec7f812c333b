#include "holosim/design/toc.hpp"

#include <cmath>

#include "holosim/errors.hpp"
#include "holosim/units.hpp"

namespace holosim::design {

TocSolution solve_toc(double gamma, double detuning_mhz, double g_mhz) {
  if (!(gamma > 0.0) || !(gamma < 2.0 * pi))
    throw InvalidInputError("solve_toc: gamma must be in (0, 2*pi)");
  if (!(g_mhz > 0.0)) throw InvalidInputError("solve_toc: g must be > 0");

  const double G = mhz_to_angular(g_mhz);
  const double D = mhz_to_angular(detuning_mhz);
  const double s = 2.0 * (pi - gamma);  // eta*tau, angular

  // tau^2 (G^2 + D^2/4) + (s D / 2) tau + (s^2/4 - pi^2) = 0.
  const double a = G * G + 0.25 * D * D;
  const double b = 0.5 * s * D;
  const double c = 0.25 * s * s - pi * pi;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0)
    throw DesignInfeasibleError("solve_toc: no real loop duration for these inputs");
  // c < 0, so the two roots straddle zero: exactly one positive root.
  const double tau = (-b + std::sqrt(disc)) / (2.0 * a);
  if (!(tau > 0.0))
    throw DesignInfeasibleError("solve_toc: no positive loop duration");

  TocSolution sol;
  sol.tau_ns = tau;
  sol.eta_mhz = angular_to_mhz(s / tau);
  sol.xi_total = tau * std::sqrt(G * G + 0.25 * std::pow(D + s / tau, 2));
  sol.tau0_ns = pi / G;
  return sol;
}

double toc_closed_form_tau(double gamma, double detuning_mhz, double g_mhz,
                           double eta_mhz, double tau_ns) {
  const double tau0 = pi / mhz_to_angular(g_mhz);
  double factor;
  if (std::abs(eta_mhz) > 1e-12) {
    factor = (1.0 + detuning_mhz / eta_mhz) * (1.0 - gamma / pi);
  } else {
    factor = (1.0 - gamma / pi) +
             mhz_to_angular(detuning_mhz) * tau_ns / (2.0 * pi);
  }
  const double r = 1.0 - factor * factor;
  if (r < 0.0)
    throw DesignInfeasibleError("toc_closed_form_tau: no real loop duration");
  return tau0 * std::sqrt(r);
}

}  // namespace holosim::design
