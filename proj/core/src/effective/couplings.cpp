#include "holosim/effective/couplings.hpp"

#include <cmath>

#include "holosim/errors.hpp"
#include "holosim/numerics/bessel.hpp"
#include "holosim/numerics/root_find.hpp"
#include "holosim/units.hpp"

namespace holosim::eff {

double EffectiveCouplings::magnitude_mhz() const { return std::hypot(g1_mhz, g2_mhz); }

double EffectiveCouplings::mixing_angle() const {
  if (g1_mhz == 0.0) return pi;
  return 2.0 * std::atan(g2_mhz / g1_mhz);
}

EffectiveCouplings effective_couplings(double coupling_mhz, double beta1, double beta2) {
  if (beta1 < 0.0 || beta2 < 0.0)
    throw InvalidInputError("effective_couplings: beta must be >= 0");
  const double j1b1 = num::bessel_jn(1, beta1);
  EffectiveCouplings c;
  c.g1_mhz = std::sqrt(2.0) * coupling_mhz * j1b1 * num::bessel_jn(1, beta2);
  c.g2_mhz = std::sqrt(2.0) * coupling_mhz * j1b1 * num::bessel_jn(0, beta2);
  return c;
}

double solve_beta_for_theta(double theta_target, double /*beta1*/) {
  if (!(theta_target > 0.0) || theta_target > pi)
    throw InvalidInputError("solve_beta_for_theta: theta must be in (0, pi]");
  if (theta_target == pi) return 0.0;

  const double ratio = std::tan(0.5 * theta_target);
  auto f = [&](double b) {
    return num::bessel_jn(0, b) / num::bessel_jn(1, b) - ratio;
  };
  const double lo = 1e-4, hi = 2.4;
  if (f(lo) * f(hi) > 0.0)
    throw DesignInfeasibleError("solve_beta_for_theta: ratio unattainable on (0, 2.4)");
  return num::find_root_bracketed(f, lo, hi, 1e-13);
}

}  // namespace holosim::eff
