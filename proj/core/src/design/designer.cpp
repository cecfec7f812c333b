#include "holosim/design/designer.hpp"

#include <cmath>
#include <vector>

#include "holosim/effective/couplings.hpp"
#include "holosim/effective/resonance.hpp"
#include "holosim/errors.hpp"
#include "holosim/numerics/bessel.hpp"
#include "holosim/numerics/ode.hpp"
#include "holosim/numerics/root_find.hpp"
#include "holosim/units.hpp"

namespace holosim::design {

namespace {

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * pi);
  if (a < 0.0) a += 2.0 * pi;
  return a;
}

// Measured precession rate of the bright-channel two-level problem: a
// least-squares fit of the auxiliary population to A sin^2(W t) over a
// window around the design value.
double fit_precession_rate(const dev::DrivenPair& base, const PulseSchedule& sched,
                           double omega_design, double dt) {
  dev::DrivenPair probe = apply_schedule(base, sched, 0);
  probe.left.levels = 3;
  probe.right.levels = 3;
  dev::PairHamiltonian h(probe);
  const auto idx = dev::dfs_states(dev::DfsEncoding::Single, 3, 3);
  const int i0 = idx.at("0L"), i1 = idx.at("1L"), ia = idx.at("aL");

  const auto psi_plus = eff::DressedFrame{sched.gate.theta, sched.gate.phi}.psi_plus();
  num::CVector psi = num::CVector::Zero(9);
  psi(i0) = psi_plus(0);
  psi(i1) = psi_plus(1);

  const double t_end = 2.0 * sched.tau_ns;
  const long n = std::lround(t_end / dt);
  const long stride = std::max(1L, n / 4000);
  std::vector<double> ts, pops;

  num::CMatrix hm(9, 9);
  auto deriv = [&](double t, const num::CVector& y, num::CVector& dy) {
    h.eval(t, hm);
    dy = num::Complex(0.0, -1.0) * (hm * y);
  };
  num::CVector k1 = psi, k2 = psi, k3 = psi, k4 = psi, tmp = psi;
  for (long i = 0; i < n; ++i) {
    num::rk4_step(deriv, psi, i * dt, dt, k1, k2, k3, k4, tmp);
    if ((i + 1) % stride == 0) {
      ts.push_back((i + 1) * dt);
      pops.push_back(std::norm(psi(ia)));
    }
  }

  auto sse_at = [&](double w) {
    double num_acc = 0.0, den = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double s2 = std::pow(std::sin(w * ts[i]), 2);
      num_acc += pops[i] * s2;
      den += s2 * s2;
    }
    const double amp = den > 0.0 ? num_acc / den : 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double r = pops[i] - amp * std::pow(std::sin(w * ts[i]), 2);
      ss += r * r;
    }
    return ss;
  };
  double best_w = omega_design, best = sse_at(best_w);
  double lo = 0.96 * omega_design, hi = 1.04 * omega_design;
  for (int pass = 0; pass < 2; ++pass) {
    const int npts = 1201;
    for (int i = 0; i < npts; ++i) {
      const double w = lo + (hi - lo) * i / double(npts - 1);
      const double s = sse_at(w);
      if (s < best) {
        best = s;
        best_w = w;
      }
    }
    const double half = 2.0 * (hi - lo) / npts;
    lo = best_w - half;
    hi = best_w + half;
  }
  return best_w;
}

}  // namespace

PulseSchedule design_single_qubit_gate(const SingleQubitGateSpec& spec,
                                       const dev::DrivenPair& device,
                                       double detuning_mhz, double beta1,
                                       const DesignOptions& options,
                                       CalibrationResult* calibration) {
  spec.validate();
  device.validate();
  if (!(beta1 > 0.0) || beta1 >= 2.4)
    throw InvalidInputError("design_single_qubit_gate: beta1 must be in (0, 2.4)");

  const double beta2 = solve_beta_for_theta(spec.theta, beta1);
  const auto coup = eff::effective_couplings(device.coupling_mhz, beta1, beta2);
  const auto res = eff::solve_resonance(device.pair_detuning_mhz(),
                                        device.modulated_transmon().anharmonicity_mhz,
                                        device.other_transmon().anharmonicity_mhz,
                                        detuning_mhz);

  double scale = 1.0;
  PulseSchedule sched;
  CalibrationResult cal;
  const int rounds = options.calibrate ? options.calibration_iterations + 1 : 1;
  for (int round = 0; round < rounds; ++round) {
    const double g = coup.magnitude_mhz() * scale;
    const TocSolution toc = solve_toc(spec.gamma, detuning_mhz, g);

    sched = PulseSchedule{};
    sched.scheme = Scheme::Toc;
    sched.gate = spec;
    sched.tau_ns = toc.tau_ns;
    sched.detuning_mhz = detuning_mhz;
    sched.eta_mhz = toc.eta_mhz;
    sched.beta1 = beta1;
    sched.beta2 = beta2;
    sched.w_eps1_mhz = res.w_eps1_mhz;
    sched.w_eps2_mhz = res.w_eps2_mhz;
    sched.g1_mhz = coup.g1_mhz * scale;
    sched.g2_mhz = coup.g2_mhz * scale;
    sched.g_scale = scale;

    DriveSegment seg;
    seg.duration_ns = toc.tau_ns;
    seg.phase1 = 0.0;
    seg.phase2 = wrap_angle(spec.phi + pi);  // phi = 2*phase1 + phase2 - pi
    seg.phi20 = wrap_angle(seg.phase1 + pi);
    sched.segments = {seg};

    if (round + 1 < rounds) {
      const double omega_design = pi / toc.tau_ns;
      const double omega_meas =
          fit_precession_rate(device, sched, omega_design, options.probe_dt_ns);
      cal.performed = true;
      cal.omega_ratio = omega_meas / omega_design;
      if (std::abs(cal.omega_ratio - 1.0) > 0.01)
        throw DesignInfeasibleError(
            "design_single_qubit_gate: full-model precession deviates from the "
            "reduced model by more than 1%");
      const double rate = 0.5 * mhz_to_angular(detuning_mhz + toc.eta_mhz);
      const double g_meas_sq = omega_meas * omega_meas - rate * rate;
      if (g_meas_sq <= 0.0) break;
      const double kappa = std::sqrt(g_meas_sq) / mhz_to_angular(g);
      scale *= kappa;
      cal.g_scale = scale;
    }
  }
  if (calibration) *calibration = cal;
  return sched;
}

PulseSchedule design_conventional_gate(const SingleQubitGateSpec& spec,
                                       const dev::DrivenPair& device, double g_mhz) {
  spec.validate();
  device.validate();
  if (!(g_mhz > 0.0))
    throw InvalidInputError("design_conventional_gate: g must be > 0");

  const double beta2 = solve_beta_for_theta(spec.theta, 1.0);
  // Match the requested composite coupling with the tone-1 amplitude.
  const double env = std::hypot(num::bessel_jn(0, beta2), num::bessel_jn(1, beta2));
  const double target_j1 = g_mhz / (std::sqrt(2.0) * device.coupling_mhz * env);
  double beta1 = 0.0;
  if (target_j1 <= num::bessel_jn(1, 1.8412)) {
    beta1 = num::find_root_bracketed(
        [&](double b) { return num::bessel_jn(1, b) - target_j1; }, 1e-6, 1.8412,
        1e-12);
  } else {
    throw DesignInfeasibleError(
        "design_conventional_gate: requested g exceeds the drive's reach");
  }

  const auto res = eff::solve_resonance(device.pair_detuning_mhz(),
                                        device.modulated_transmon().anharmonicity_mhz,
                                        device.other_transmon().anharmonicity_mhz,
                                        0.0);
  const auto coup = eff::effective_couplings(device.coupling_mhz, beta1, beta2);

  PulseSchedule sched;
  sched.scheme = Scheme::Conventional;
  sched.gate = spec;
  sched.tau_ns = pi / mhz_to_angular(coup.magnitude_mhz());
  sched.detuning_mhz = 0.0;
  sched.eta_mhz = 0.0;
  sched.beta1 = beta1;
  sched.beta2 = beta2;
  sched.w_eps1_mhz = res.w_eps1_mhz;
  sched.w_eps2_mhz = res.w_eps2_mhz;
  sched.g1_mhz = coup.g1_mhz;
  sched.g2_mhz = coup.g2_mhz;

  DriveSegment a, b;
  a.duration_ns = 0.5 * sched.tau_ns;
  a.phase1 = 0.0;
  a.phase2 = wrap_angle(spec.phi + pi);
  a.phi20 = wrap_angle(a.phase1 + pi);
  b.duration_ns = 0.5 * sched.tau_ns;
  b.phase1 = wrap_angle(a.phase1 + pi - spec.gamma);
  b.phase2 = wrap_angle(spec.phi + pi - 2.0 * b.phase1);
  b.phi20 = wrap_angle(a.phi20 + pi - spec.gamma);
  sched.segments = {a, b};
  return sched;
}

double choose_beta1(const dev::DrivenPair& device, double detuning_mhz, double theta) {
  const double beta2 = solve_beta_for_theta(theta, 1.0);
  const auto res = eff::solve_resonance(device.pair_detuning_mhz(),
                                        device.modulated_transmon().anharmonicity_mhz,
                                        device.other_transmon().anharmonicity_mhz,
                                        detuning_mhz);
  const double bound =
      0.1 * std::min(std::abs(res.w_eps1_mhz), std::abs(res.w_eps2_mhz));
  const double peak = 1.8412;  // argmax of J1
  auto g_of = [&](double b1) {
    return eff::effective_couplings(device.coupling_mhz, b1, beta2).magnitude_mhz();
  };
  if (g_of(peak) <= bound) return peak;
  return num::find_root_bracketed([&](double b) { return g_of(b) - bound; }, 1e-6,
                                  peak, 1e-10);
}

}  // namespace holosim::design
