#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "holosim/numerics/matrix.hpp"
#include "holosim/numerics/time_grid.hpp"

namespace holosim::dyn {

// Fills `out` with H(t) in rad/ns.
using HamiltonianFn = std::function<void(double, num::CMatrix&)>;

// Time series of populations, state fidelity, and the final state/density
// matrix from one propagation run.
struct EvolutionResult {
  std::vector<double> times_ns;
  std::map<std::string, std::vector<double>> populations;
  std::vector<double> fidelity;  // vs the fixed target, when one is given
  num::CVector final_state;      // unitary runs
  num::CMatrix final_density;
  num::CMatrix propagator;  // when requested

  double final_fidelity() const { return fidelity.empty() ? 0.0 : fidelity.back(); }
};

struct EvolveOptions {
  // Population labels to record; everything unlabeled lands in "leak".
  std::map<std::string, int> labels;
  // Fixed comparison state for the fidelity series (dimension of the state).
  num::CVector target;
  bool accumulate_propagator = false;
  // Norm (unitary) / trace+Hermiticity+positivity (Lindblad) checks at
  // sampled points. Off for non-state inputs such as operator-basis runs.
  bool check_invariants = true;
  double norm_tol = 1e-6;
};

// RK4 integration of dpsi/dt = -i H(t) psi.
EvolutionResult evolve_unitary(const HamiltonianFn& h, const num::CVector& psi0,
                               const num::TimeGrid& grid,
                               const EvolveOptions& options = {});

// RK4 integration of
//   drho/dt = -i[H,rho] + sum_k ( L_k rho L_k^dag - 1/2 {L_k^dag L_k, rho} ).
EvolutionResult evolve_lindblad(const HamiltonianFn& h,
                                const std::vector<num::CMatrix>& collapse,
                                const num::CMatrix& rho0, const num::TimeGrid& grid,
                                const EvolveOptions& options = {});

// Full propagator U(tau, 0) of a closed system; unitarity enforced to 1e-8.
num::CMatrix propagator(const HamiltonianFn& h, int dim, double tau_ns, double dt_ns);

}  // namespace holosim::dyn
