#pragma once

#include <numbers>

// Unit conventions used throughout:
//   frequencies   linear MHz (the
//                 Hamiltonian builders multiply by 2*pi)
//   times         ns
//   Hamiltonians  angular, rad/ns
// 1 MHz (linear) = 2*pi*1e-3 rad/ns (angular).

namespace holosim {

inline constexpr double pi = std::numbers::pi;

// rad/ns per linear MHz
inline constexpr double angular_per_mhz = 2.0 * pi * 1e-3;

inline constexpr double mhz_to_angular(double f_mhz) { return f_mhz * angular_per_mhz; }
inline constexpr double angular_to_mhz(double w) { return w / angular_per_mhz; }

}  // namespace holosim
