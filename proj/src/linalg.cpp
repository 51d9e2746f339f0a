#include "rcrae/linalg.hpp"

namespace rcrae {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed_single_qubit(const Matrix2& u, int qubit, int num_qubits) {
  Matrix left = Matrix::Identity(1LL << qubit, 1LL << qubit);
  Matrix right = Matrix::Identity(1LL << (num_qubits - qubit - 1),
                                  1LL << (num_qubits - qubit - 1));
  return kron(kron(left, Matrix(u)), right);
}

double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  // Align b's phase on the largest-overlap entry of tr(b† a).
  Complex ov = (b.adjoint() * a).trace();
  Complex phase = std::abs(ov) > 1e-300 ? ov / std::abs(ov) : Complex(1, 0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

double unitarity_error(const Matrix& u) {
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

}  // namespace rcrae
