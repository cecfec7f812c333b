#pragma once

#include <map>
#include <string>
#include <vector>

#include "holosim/device/transmon.hpp"
#include "holosim/numerics/matrix.hpp"

namespace holosim::dev {

// Interaction-picture Hamiltonian of a driven coupled pair, dimension
// d_left*d_right, entries in rad/ns. Terms where the modulated transmon
// gains one excitation carry exp(i*2*pi*rate*t) * exp(i*(F1+F2)); the
// Hermitian conjugates are added explicitly.
//
// Matrix element convention (modulated level n -> n+1, other m -> m-1):
//   sqrt((n+1) m) * 2*pi*g_c
//     * exp{ i 2*pi [ (Delta_pair + delta_d) - n*alpha_mod + (m-1)*alpha_other ] t }
//     * exp{ i (F1(t)+F2(t)) }  + h.c.
class PairHamiltonian {
 public:
  explicit PairHamiltonian(const DrivenPair& pair);

  int dimension() const { return dim_; }

  // Writes H(t) into `out` (resized as needed).
  void eval(double t_ns, num::CMatrix& out) const;

  num::CMatrix operator()(double t_ns) const {
    num::CMatrix h;
    eval(t_ns, h);
    return h;
  }

  const DrivenPair& pair() const { return pair_; }

 private:
  struct Term {
    int row, col;
    double amp;      // rad/ns
    double rate;     // rad/ns
  };
  DrivenPair pair_;
  int dim_;
  std::vector<Term> terms_;
};

// One-shot convenience wrapper around PairHamiltonian.
num::CMatrix interaction_hamiltonian(const DrivenPair& pair, double t_ns);

// How the pure-dephasing collapse operator is modeled on a multi-level
// transmon. QubitProjector weights only level |1> (two-level-limit
// convention); NumberOperator uses n-hat = S^dag S.
enum class DephasingModel { QubitProjector, NumberOperator };

// Lindblad collapse operators for both transmons, embedded in the pair
// space: relaxation sqrt(2*pi*kappa1)*S_j and dephasing
// sqrt(2*pi*kappa_phi)*D_j with D_j per the chosen model. Rates angular,
// rad/ns; zero-rate operators are omitted.
std::vector<num::CMatrix> collapse_operators(
    const DrivenPair& pair, DephasingModel model = DephasingModel::QubitProjector);

// Decoherence-free-subspace encodings hosted by transmon pairs.
enum class DfsEncoding { Single, Double };

// Map from logical/auxiliary labels to physical product-state indices.
// Single (one pair, d levels each): "0L" -> |0,2>, "1L" -> |2,0>, "aL" -> |1,1>.
// Double (the active middle pair of a two-logical-qubit register):
// "00L" -> |2,0>, "01L" -> |2,2>, "10L" -> |0,0>, "11L" -> |0,2>,
// "aL" -> |1,1>. Index convention: left-significant, i*d_right + j.
std::map<std::string, int> dfs_states(DfsEncoding encoding, int d_left, int d_right);

}  // namespace holosim::dev
