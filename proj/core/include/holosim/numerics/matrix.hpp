#pragma once

#include <complex>

#include <Eigen/Dense>

namespace holosim::num {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex I{0.0, 1.0};

// Kronecker product, row-major index convention: the left factor is the
// most significant subsystem, i.e. |n_left, m_right> maps to index
// n*cols(b)+m.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);

// Largest entrywise deviation from Hermiticity, |M - M^dag|_max.
double hermiticity_defect(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double tol = 1e-12);

// Identity of dimension d.
CMatrix identity(int d);

// Lower (annihilation) operator on a d-level system: sum_n sqrt(n)|n-1><n|.
CMatrix lower_operator(int d);

// Frobenius-normalized distance of U^dag U from the identity.
double unitarity_defect(const CMatrix& u);

}  // namespace holosim::num
