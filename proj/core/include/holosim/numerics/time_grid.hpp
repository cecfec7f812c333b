#pragma once

#include <cmath>

#include "holosim/errors.hpp"

namespace holosim::num {

// Uniform integration grid. `sample_stride` controls how often the
// propagators record populations (1 = every step).
struct TimeGrid {
  double t_start_ns = 0.0;
  double t_end_ns = 0.0;
  double step_ns = 1e-3;
  long sample_stride = 1;

  long n_steps() const {
    return std::lround((t_end_ns - t_start_ns) / step_ns);
  }

  void validate() const {
    if (!(t_end_ns > t_start_ns)) throw InvalidInputError("TimeGrid: t_end <= t_start");
    if (!(step_ns > 0.0)) throw InvalidInputError("TimeGrid: step <= 0");
    if (sample_stride < 1) throw InvalidInputError("TimeGrid: sample stride < 1");
    const double steps = (t_end_ns - t_start_ns) / step_ns;
    if (std::abs(steps - std::lround(steps)) > 1e-6)
      throw InvalidInputError("TimeGrid: span is not a whole number of steps");
  }

  static TimeGrid over(double tau_ns, double step_ns, long stride = 1) {
    TimeGrid g;
    g.t_end_ns = tau_ns;
    // Snap the step so the span is a whole number of steps.
    const long n = std::max(1L, std::lround(tau_ns / step_ns));
    g.step_ns = tau_ns / double(n);
    g.sample_stride = stride;
    return g;
  }
};

}  // namespace holosim::num
