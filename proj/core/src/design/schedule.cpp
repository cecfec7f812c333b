#include "holosim/design/schedule.hpp"

#include <cmath>
#include <numeric>

#include "holosim/errors.hpp"
#include "holosim/units.hpp"

namespace holosim::design {

using num::CMatrix;
using num::Complex;

void PulseSchedule::validate() const {
  gate.validate();
  if (!(tau_ns > 0.0)) throw InvalidInputError("PulseSchedule: tau must be > 0");
  if (segments.empty()) throw InvalidInputError("PulseSchedule: no segments");
  double total = 0.0;
  for (const auto& s : segments) total += s.duration_ns;
  if (std::abs(total - tau_ns) > 1e-9 * std::max(1.0, tau_ns))
    throw InvalidInputError("PulseSchedule: segment durations do not sum to tau");
}

std::array<dev::DriveTone, 2> PulseSchedule::tones(std::size_t segment) const {
  const auto& seg = segments.at(segment);
  dev::DriveTone t1{beta1, w_eps1_mhz, eta_mhz, seg.phase1};
  dev::DriveTone t2{beta2, w_eps2_mhz, -2.0 * eta_mhz, seg.phase2};
  return {t1, t2};
}

eff::EffectiveThreeLevel PulseSchedule::effective_model(std::size_t segment) const {
  eff::EffectiveThreeLevel m;
  m.g1_mhz = g1_mhz;
  m.g2_mhz = g2_mhz;
  m.theta = gate.theta;
  m.phi = gate.phi;
  m.detuning_mhz = detuning_mhz;
  m.chirp_mhz = eta_mhz;
  m.phi20 = segments.at(segment).phi20;
  return m;
}

dev::DrivenPair apply_schedule(const dev::DrivenPair& base,
                               const PulseSchedule& schedule, std::size_t segment) {
  dev::DrivenPair p = base;
  p.tones = schedule.tones(segment);
  return p;
}

ScheduledHamiltonian::ScheduledHamiltonian(const dev::DrivenPair& base,
                                           const PulseSchedule& schedule) {
  schedule.validate();
  double t = 0.0;
  for (std::size_t k = 0; k < schedule.segments.size(); ++k) {
    t += schedule.segments[k].duration_ns;
    ends_.push_back(t);
    builders_.emplace_back(apply_schedule(base, schedule, k));
  }
}

void ScheduledHamiltonian::eval(double t_ns, CMatrix& out) const {
  std::size_t k = 0;
  while (k + 1 < ends_.size() && t_ns > ends_[k]) ++k;
  builders_[k].eval(t_ns, out);
}

EffectiveHamiltonian::EffectiveHamiltonian(const PulseSchedule& schedule,
                                           double drift_diff_mhz,
                                           double coupling_error) {
  schedule.validate();
  double t = 0.0;
  for (std::size_t k = 0; k < schedule.segments.size(); ++k) {
    t += schedule.segments[k].duration_ns;
    ends_.push_back(t);
    auto m = schedule.effective_model(k);
    m.drift_diff_mhz = drift_diff_mhz;
    m.coupling_error = coupling_error;
    models_.push_back(m);
  }
}

void EffectiveHamiltonian::eval(double t_ns, CMatrix& out) const {
  std::size_t k = 0;
  while (k + 1 < ends_.size() && t_ns > ends_[k]) ++k;
  eff::effective_hamiltonian_1q(models_[k], t_ns, out);
}

Eigen::Matrix2cd logical_frame_correction(const PulseSchedule& schedule) {
  const auto frame = eff::DressedFrame{schedule.gate.theta, schedule.gate.phi};
  const Eigen::Vector2cd p = frame.psi_plus();
  const Complex ph =
      std::exp(Complex(0.0, 0.5 * mhz_to_angular(schedule.detuning_mhz) *
                                schedule.tau_ns));
  return Eigen::Matrix2cd::Identity() + (ph - 1.0) * (p * p.adjoint());
}

double xi_of_t(const PulseSchedule& schedule, double t_ns) {
  const double g = mhz_to_angular(schedule.g_mhz());
  const double rate = mhz_to_angular(schedule.detuning_mhz + schedule.eta_mhz);
  return t_ns * std::sqrt(g * g + 0.25 * rate * rate);
}

double chi_of_schedule(const PulseSchedule& schedule) {
  const double g = mhz_to_angular(schedule.g_mhz());
  const double rate = mhz_to_angular(schedule.detuning_mhz + schedule.eta_mhz);
  return std::atan2(2.0 * g, rate);
}

}  // namespace holosim::design
