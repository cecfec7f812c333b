#include "holosim/numerics/matrix.hpp"

namespace holosim::num {

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
  return hermiticity_defect(m) <= tol;
}

CMatrix identity(int d) { return CMatrix::Identity(d, d); }

CMatrix lower_operator(int d) {
  CMatrix s = CMatrix::Zero(d, d);
  for (int n = 1; n < d; ++n) s(n - 1, n) = std::sqrt(double(n));
  return s;
}

double unitarity_defect(const CMatrix& u) {
  const CMatrix g = u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols());
  return g.norm();
}

}  // namespace holosim::num
