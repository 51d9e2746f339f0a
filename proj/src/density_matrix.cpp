#include "rcrae/density_matrix.hpp"

#include <stdexcept>

namespace rcrae {

DensityMatrix::DensityMatrix(int num_qubits, Matrix m)
    : num_qubits_(num_qubits), m_(std::move(m)) {
  if (num_qubits_ < 1 || num_qubits_ > kMaxDenseQubits)
    throw std::invalid_argument("density matrix: qubit count out of range");
  if (m_.rows() != dim_of(num_qubits_) || m_.cols() != m_.rows())
    throw std::invalid_argument("density matrix: dimension mismatch");
}

DensityMatrix DensityMatrix::ground_state(int num_qubits) {
  Matrix m = Matrix::Zero(dim_of(num_qubits), dim_of(num_qubits));
  m(0, 0) = 1.0;
  return DensityMatrix(num_qubits, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  const long long d = dim_of(num_qubits);
  return DensityMatrix(num_qubits, Matrix::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::trace_error() const { return std::abs(m_.trace() - Complex(1, 0)); }

double DensityMatrix::hermiticity_error() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m_ + m_.adjoint()));
  return es.eigenvalues().minCoeff();
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

}  // namespace rcrae
