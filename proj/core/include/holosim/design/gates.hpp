#pragma once

#include "holosim/numerics/matrix.hpp"

namespace holosim::design {

// Target holonomic single-qubit gate: total loop phase gamma, dressed-frame
// orientation (theta, phi). Named axis settings:
//   X rotation by a: (gamma=a, theta=pi/2, phi=pi)
//   Y rotation by a: (gamma=a, theta=pi/2, phi=pi/2)
//   Z rotation by a: (gamma=a, theta=pi,   phi=pi)
struct SingleQubitGateSpec {
  double gamma = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  void validate() const;

  static SingleQubitGateSpec rx(double angle);
  static SingleQubitGateSpec ry(double angle);
  static SingleQubitGateSpec rz(double angle);
};

// The gate on {|0L>, |1L>}:
//   cos(gamma/2) I + i sin(gamma/2) [[cos th, sin th e^{i phi}],
//                                    [sin th e^{-i phi}, -cos th]]
Eigen::Matrix2cd ideal_unitary_1q(const SingleQubitGateSpec& spec);

// Control-phase gate diag(1, 1, 1, e^{i gamma2}) on {|00L>..|11L>}.
Eigen::Matrix4cd ideal_unitary_2q(double gamma2);

}  // namespace holosim::design
