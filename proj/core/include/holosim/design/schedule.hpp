#pragma once

#include <vector>

#include "holosim/design/gates.hpp"
#include "holosim/design/toc.hpp"
#include "holosim/device/pair_hamiltonian.hpp"
#include "holosim/device/transmon.hpp"
#include "holosim/effective/three_level.hpp"
#include "holosim/numerics/matrix.hpp"

namespace holosim::design {

enum class Scheme { Toc, Conventional };

// One piecewise-constant drive interval. Tone phases are absolute (the
// carrier keeps running through segment boundaries; only the phase offsets
// jump).
struct DriveSegment {
  double duration_ns = 0.0;
  double phase1 = 0.0;  // tone-1 phase offset
  double phase2 = 0.0;  // tone-2 phase offset
  double phi20 = 0.0;   // effective coupling phase at the segment start
};

// Concrete drive program for one single-logical-qubit gate.
struct PulseSchedule {
  Scheme scheme = Scheme::Toc;
  SingleQubitGateSpec gate;

  double tau_ns = 0.0;
  double detuning_mhz = 0.0;  // design detuning Delta
  double eta_mhz = 0.0;       // chirp rate (zero for the conventional scheme)
  double beta1 = 0.0;
  double beta2 = 0.0;
  double w_eps1_mhz = 0.0;  // tone base frequencies (signed)
  double w_eps2_mhz = 0.0;
  double g1_mhz = 0.0;  // effective couplings used by the design
  double g2_mhz = 0.0;
  double g_scale = 1.0;  // calibration factor folded into g1/g2

  std::vector<DriveSegment> segments;  // durations sum to tau_ns

  double g_mhz() const { return std::hypot(g1_mhz, g2_mhz); }

  // Device tones for a given segment.
  std::array<dev::DriveTone, 2> tones(std::size_t segment = 0) const;

  // Reduced three-level model of this drive (segment-local phi20).
  eff::EffectiveThreeLevel effective_model(std::size_t segment = 0) const;

  void validate() const;
};

// Copy of `base` with the schedule's tones installed for one segment.
dev::DrivenPair apply_schedule(const dev::DrivenPair& base,
                               const PulseSchedule& schedule,
                               std::size_t segment = 0);

// Piecewise interaction-picture Hamiltonian of a scheduled drive.
class ScheduledHamiltonian {
 public:
  ScheduledHamiltonian(const dev::DrivenPair& base, const PulseSchedule& schedule);

  int dimension() const { return builders_.front().dimension(); }
  void eval(double t_ns, num::CMatrix& out) const;

 private:
  std::vector<double> ends_;
  std::vector<dev::PairHamiltonian> builders_;
};

// Piecewise effective three-level generator (dressed frame) of a schedule,
// with drift/coupling errors injectable for robustness studies.
class EffectiveHamiltonian {
 public:
  EffectiveHamiltonian(const PulseSchedule& schedule, double drift_diff_mhz = 0.0,
                       double coupling_error = 0.0);

  void eval(double t_ns, num::CMatrix& out) const;

 private:
  std::vector<double> ends_;
  std::vector<eff::EffectiveThreeLevel> models_;
};

// End-of-gate reference-frame rotation relating the interaction-picture
// logical block to the dressed bookkeeping the designs are stated in:
// exp(+i * 2*pi*Delta * tau/2 * |psi+><psi+|) on {|0L>, |1L>}. Identity for
// resonant (Delta = 0) schedules. Full-model results are rotated by this
// before comparing against ideal_unitary_1q.
Eigen::Matrix2cd logical_frame_correction(const PulseSchedule& schedule);

// Accumulated precession angle xi(t) and mixing angle chi of the dressed
// two-level problem, for diagnostics.
double xi_of_t(const PulseSchedule& schedule, double t_ns);
double chi_of_schedule(const PulseSchedule& schedule);

}  // namespace holosim::design
