#pragma once

#include <cmath>
#include <utility>

#include "holosim/errors.hpp"
#include "holosim/numerics/matrix.hpp"

namespace holosim::num {

// Classical fixed-step RK4 update for a flat complex state (vector or
// matrix). `deriv(t, y, out)` must write dy/dt into `out`. Throws
// NumericalBlowupError when the state picks up a NaN.
template <typename State, typename Deriv>
void rk4_step(const Deriv& deriv, State& y, double t, double dt,
              State& k1, State& k2, State& k3, State& k4, State& tmp) {
  deriv(t, y, k1);
  tmp = y + (0.5 * dt) * k1;
  deriv(t + 0.5 * dt, tmp, k2);
  tmp = y + (0.5 * dt) * k2;
  deriv(t + 0.5 * dt, tmp, k3);
  tmp = y + dt * k3;
  deriv(t + dt, tmp, k4);
  y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!y.allFinite()) throw NumericalBlowupError("rk4_step: non-finite state", t);
}

// Convenience driver: integrate from t0 over n_steps of size dt.
template <typename State, typename Deriv>
void rk4_integrate(const Deriv& deriv, State& y, double t0, double dt, long n_steps) {
  State k1 = y, k2 = y, k3 = y, k4 = y, tmp = y;
  double t = t0;
  for (long i = 0; i < n_steps; ++i) {
    rk4_step(deriv, y, t, dt, k1, k2, k3, k4, tmp);
    t = t0 + double(i + 1) * dt;
  }
}

}  // namespace holosim::num
