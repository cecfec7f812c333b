#pragma once

namespace holosim::design {

// Time-optimal-control solution for one holonomic loop: constant drive g,
// constant chirp eta, duration tau, satisfying
//   eta * tau          = 2 (pi - gamma)          (angular)
//   tau * sqrt(g^2 + ((Delta + eta)/2)^2) = pi   (angular, cyclicity)
struct TocSolution {
  double eta_mhz = 0.0;   // chirp rate, linear MHz
  double tau_ns = 0.0;    // loop duration
  double xi_total = 0.0;  // accumulated precession angle, equals pi by design
  double tau0_ns = 0.0;   // conventional single-loop time pi/(2*pi*g)
};

// Solve the pair of conditions for (eta, tau); the substitution gives a
// quadratic in tau with exactly one positive root. Cross-checked against
// the closed form tau0*sqrt(1-(1+Delta/eta)^2(1-gamma/pi)^2).
TocSolution solve_toc(double gamma, double detuning_mhz, double g_mhz);

// Closed-form loop time tau0*sqrt(1-(1+Delta/eta)^2(1-gamma/pi)^2) for a
// given solution (eta, tau). The Delta/eta factor is evaluated through the
// identity Delta/eta*(1-gamma/pi) = Delta*tau/(2*pi) so the gamma -> pi
// (eta -> 0) corner stays finite.
double toc_closed_form_tau(double gamma, double detuning_mhz, double g_mhz,
                           double eta_mhz, double tau_ns);

}  // namespace holosim::design
