#include "holosim/device/pair_hamiltonian.hpp"

#include <cmath>

#include "holosim/units.hpp"

namespace holosim::dev {

using num::CMatrix;
using num::Complex;

PairHamiltonian::PairHamiltonian(const DrivenPair& pair) : pair_(pair) {
  pair_.validate();
  if (pair_.left.levels < 3 || pair_.right.levels < 3)
    throw InvalidDeviceError("PairHamiltonian: truncation must be >= 3 levels");
  dim_ = pair_.dimension();

  const bool mod_left = pair_.modulated == Side::Left;
  const int d_mod = pair_.modulated_transmon().levels;
  const int d_oth = pair_.other_transmon().levels;
  const int d_right = pair_.right.levels;
  const double alpha_mod = pair_.modulated_transmon().anharmonicity_mhz;
  const double alpha_oth = pair_.other_transmon().anharmonicity_mhz;
  const double delta_pair = pair_.pair_detuning_mhz() + pair_.drift_difference_mhz();

  auto index = [&](int n_mod, int m_oth) {
    return mod_left ? n_mod * d_right + m_oth : m_oth * d_right + n_mod;
  };

  for (int n = 0; n + 1 < d_mod; ++n) {
    for (int m = 1; m < d_oth; ++m) {
      Term term;
      term.row = index(n + 1, m - 1);
      term.col = index(n, m);
      term.amp = std::sqrt(double((n + 1) * m)) * mhz_to_angular(pair_.coupling_mhz);
      term.rate =
          mhz_to_angular(delta_pair - n * alpha_mod + (m - 1) * alpha_oth);
      terms_.push_back(term);
    }
  }
}

void PairHamiltonian::eval(double t, CMatrix& out) const {
  out.setZero(dim_, dim_);
  double f_drive = 0.0;
  for (const auto& tone : pair_.tones) {
    f_drive += tone.beta *
               std::sin(mhz_to_angular(tone.base_freq_mhz + tone.freq_offset_mhz) * t +
                        tone.phase);
  }
  const Complex drive = std::exp(Complex(0.0, f_drive));
  for (const auto& term : terms_) {
    const Complex v = term.amp * std::exp(Complex(0.0, term.rate * t)) * drive;
    out(term.row, term.col) += v;
    out(term.col, term.row) += std::conj(v);
  }
}

CMatrix interaction_hamiltonian(const DrivenPair& pair, double t_ns) {
  return PairHamiltonian(pair)(t_ns);
}

std::vector<CMatrix> collapse_operators(const DrivenPair& pair, DephasingModel model) {
  const int dl = pair.left.levels;
  const int dr = pair.right.levels;
  const CMatrix il = num::identity(dl);
  const CMatrix ir = num::identity(dr);

  auto dephasing_op = [&](int d) {
    if (model == DephasingModel::QubitProjector) {
      CMatrix p = CMatrix::Zero(d, d);
      p(1, 1) = 1.0;
      return p;
    }
    const CMatrix s = num::lower_operator(d);
    return CMatrix(s.adjoint() * s);
  };

  std::vector<CMatrix> ops;
  auto add = [&](double rate_mhz, const CMatrix& op) {
    if (rate_mhz < 0.0) throw InvalidDeviceError("collapse_operators: negative rate");
    if (rate_mhz == 0.0) return;
    ops.push_back(std::sqrt(mhz_to_angular(rate_mhz)) * op);
  };

  add(pair.left.kappa1_mhz, num::tensor_product(num::lower_operator(dl), ir));
  add(pair.right.kappa1_mhz, num::tensor_product(il, num::lower_operator(dr)));
  add(pair.left.kappa_phi_mhz, num::tensor_product(dephasing_op(dl), ir));
  add(pair.right.kappa_phi_mhz, num::tensor_product(il, dephasing_op(dr)));
  return ops;
}

std::map<std::string, int> dfs_states(DfsEncoding encoding, int d_left, int d_right) {
  if (d_left < 3 || d_right < 3)
    throw InvalidDeviceError("dfs_states: truncation too small to host level 2");
  auto idx = [&](int i, int j) { return i * d_right + j; };
  std::map<std::string, int> m;
  if (encoding == DfsEncoding::Single) {
    m["0L"] = idx(0, 2);
    m["1L"] = idx(2, 0);
    m["aL"] = idx(1, 1);
  } else {
    // Active middle pair of the two-logical-qubit register. Logical
    // |q1 q2> lives on pair state |2(1-q1), 2 q2>.
    m["00L"] = idx(2, 0);
    m["01L"] = idx(2, 2);
    m["10L"] = idx(0, 0);
    m["11L"] = idx(0, 2);
    m["aL"] = idx(1, 1);
  }
  return m;
}

}  // namespace holosim::dev
