#include "holosim/effective/dressed.hpp"

#include <cmath>

#include "holosim/errors.hpp"
#include "holosim/units.hpp"

namespace holosim::eff {

using num::Complex;

Eigen::Vector2cd DressedFrame::psi_plus() const {
  const Complex ph = std::exp(Complex(0.0, phi));
  return {std::cos(0.5 * theta) * ph, Complex(std::sin(0.5 * theta), 0.0)};
}

Eigen::Vector2cd DressedFrame::psi_minus() const {
  const Complex ph = std::exp(Complex(0.0, phi));
  return {std::sin(0.5 * theta) * ph, Complex(-std::cos(0.5 * theta), 0.0)};
}

num::CMatrix DressedFrame::matrix() const {
  num::CMatrix u = num::CMatrix::Zero(3, 3);
  const auto p = psi_plus();
  const auto m = psi_minus();
  u(0, 0) = std::conj(p(0));
  u(0, 1) = std::conj(p(1));
  u(1, 0) = std::conj(m(0));
  u(1, 1) = std::conj(m(1));
  u(2, 2) = 1.0;
  return u;
}

DressedFrame dressed_frame(double theta, double phi) {
  if (theta < 0.0 || theta > pi)
    throw InvalidInputError("dressed_frame: theta must be in [0, pi]");
  return DressedFrame{theta, phi};
}

Eigen::Vector2cd DressedFrame2Q::psi_plus() const {
  const Complex ph = std::exp(Complex(0.0, -phi));
  return {Complex(std::cos(0.5 * theta), 0.0), std::sin(0.5 * theta) * ph};
}

Eigen::Vector2cd DressedFrame2Q::psi_minus() const {
  const Complex ph = std::exp(Complex(0.0, -phi));
  return {Complex(std::sin(0.5 * theta), 0.0), -std::cos(0.5 * theta) * ph};
}

}  // namespace holosim::eff
