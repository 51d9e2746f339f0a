#pragma once

#include <Eigen/Dense>
#include <complex>

namespace rcrae {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector = Eigen::VectorXcd;

constexpr int kMaxDenseQubits = 6;

Matrix kron(const Matrix& a, const Matrix& b);

/// U on `qubit` embedded in the n-qubit space. Qubit 0 is the leftmost
/// tensor factor (most significant bit of the basis index).
Matrix embed_single_qubit(const Matrix2& u, int qubit, int num_qubits);

/// max_ij |a_ij - e^{i phi} b_ij| minimized over the global phase phi.
double phase_aligned_distance(const Matrix& a, const Matrix& b);

double unitarity_error(const Matrix& u);

inline long long dim_of(int num_qubits) { return 1LL << num_qubits; }

}  // namespace rcrae
