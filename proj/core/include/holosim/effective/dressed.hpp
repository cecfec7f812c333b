#pragma once

#include "holosim/numerics/matrix.hpp"

namespace holosim::eff {

// Unitary change of basis {|0L>, |1L>, |aL>} -> {|psi+>, |psi->, |a>} with
//   |psi+> = cos(theta/2) e^{i phi} |0L> + sin(theta/2) |1L>
//   |psi-> = sin(theta/2) e^{i phi} |0L> - cos(theta/2) |1L>
// Only |psi+> couples to the auxiliary state.
struct DressedFrame {
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Vector2cd psi_plus() const;
  Eigen::Vector2cd psi_minus() const;

  // Rows are the dressed states expressed in the logical/auxiliary basis:
  // U * (components in {0L,1L,aL}) = components in {psi+, psi-, a}.
  num::CMatrix matrix() const;  // 3x3 unitary
};

DressedFrame dressed_frame(double theta, double phi);

// Two-logical-qubit convention: the phase sits on the second component,
//   |psi+> = cos(theta/2) |02> + sin(theta/2) e^{-i phi} |20>.
struct DressedFrame2Q {
  double theta = 0.0;
  double phi = 0.0;
  Eigen::Vector2cd psi_plus() const;
  Eigen::Vector2cd psi_minus() const;
};

}  // namespace holosim::eff
