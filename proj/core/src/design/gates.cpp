#include "holosim/design/gates.hpp"

#include <cmath>

#include "holosim/errors.hpp"
#include "holosim/units.hpp"

namespace holosim::design {

using num::Complex;

void SingleQubitGateSpec::validate() const {
  if (!(gamma > 0.0) || !(gamma < 2.0 * pi))
    throw InvalidInputError("SingleQubitGateSpec: gamma must be in (0, 2*pi)");
  if (theta < 0.0 || theta > pi)
    throw InvalidInputError("SingleQubitGateSpec: theta must be in [0, pi]");
}

SingleQubitGateSpec SingleQubitGateSpec::rx(double a) { return {a, 0.5 * pi, pi}; }
SingleQubitGateSpec SingleQubitGateSpec::ry(double a) { return {a, 0.5 * pi, 0.5 * pi}; }
SingleQubitGateSpec SingleQubitGateSpec::rz(double a) { return {a, pi, pi}; }

Eigen::Matrix2cd ideal_unitary_1q(const SingleQubitGateSpec& spec) {
  Eigen::Matrix2cd m;
  const Complex eip = std::exp(Complex(0.0, spec.phi));
  m << std::cos(spec.theta), std::sin(spec.theta) * eip,
      std::sin(spec.theta) * std::conj(eip), -std::cos(spec.theta);
  return std::cos(0.5 * spec.gamma) * Eigen::Matrix2cd::Identity() +
         Complex(0.0, std::sin(0.5 * spec.gamma)) * m;
}

Eigen::Matrix4cd ideal_unitary_2q(double gamma2) {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  u(3, 3) = std::exp(Complex(0.0, gamma2));
  return u;
}

}  // namespace holosim::design
