#pragma once

#include <array>
#include <cmath>

#include "holosim/errors.hpp"

namespace holosim::dev {

// One anharmonic multi-level transmon. Level-n energy is
// n*frequency - n(n-1)/2 * anharmonicity (linear MHz).
struct TransmonSpec {
  double frequency_mhz = 0.0;
  double anharmonicity_mhz = 0.0;  // > 0, energy deficit per added excitation
  int levels = 5;                  // truncation, >= 3
  double drift_mhz = 0.0;          // quasi-static frequency drift
  double kappa1_mhz = 0.0;         // relaxation rate (linear MHz)
  double kappa_phi_mhz = 0.0;      // pure-dephasing rate (linear MHz)

  double level_energy_mhz(int n) const {
    return n * frequency_mhz - 0.5 * n * (n - 1) * anharmonicity_mhz;
  }

  void validate() const {
    if (levels < 3) throw InvalidDeviceError("TransmonSpec: levels must be >= 3");
    if (!(anharmonicity_mhz > 0.0))
      throw InvalidDeviceError("TransmonSpec: anharmonicity must be > 0");
    if (kappa1_mhz < 0.0 || kappa_phi_mhz < 0.0)
      throw InvalidDeviceError("TransmonSpec: decoherence rates must be >= 0");
  }
};

// One frequency-modulation tone. The modulation function is
//   F(t) = beta * sin(2*pi*(base_freq + freq_offset)*t + phase)
// with t in ns and frequencies in MHz. A negative frequency selects the
// lower sideband; the chirp is realized as the static `freq_offset`.
struct DriveTone {
  double beta = 0.0;
  double base_freq_mhz = 0.0;
  double freq_offset_mhz = 0.0;
  double phase = 0.0;

  void validate() const {
    if (beta < 0.0) throw InvalidDeviceError("DriveTone: beta must be >= 0");
  }
};

enum class Side { Left, Right };

// Two coupled transmons with a two-tone frequency modulation on one side.
// Every Hamiltonian builder consumes this.
struct DrivenPair {
  TransmonSpec left;
  TransmonSpec right;
  double coupling_mhz = 0.0;
  Side modulated = Side::Left;
  std::array<DriveTone, 2> tones{};

  const TransmonSpec& modulated_transmon() const {
    return modulated == Side::Left ? left : right;
  }
  const TransmonSpec& other_transmon() const {
    return modulated == Side::Left ? right : left;
  }

  // Frequency difference omega_modulated - omega_other (signed).
  double pair_detuning_mhz() const {
    return modulated_transmon().frequency_mhz - other_transmon().frequency_mhz;
  }
  // Drift difference delta_modulated - delta_other.
  double drift_difference_mhz() const {
    return modulated_transmon().drift_mhz - other_transmon().drift_mhz;
  }

  int dimension() const { return left.levels * right.levels; }

  void validate() const {
    left.validate();
    right.validate();
    if (!(coupling_mhz > 0.0)) throw InvalidDeviceError("DrivenPair: coupling must be > 0");
    for (const auto& t : tones) t.validate();
  }
};

}  // namespace holosim::dev
