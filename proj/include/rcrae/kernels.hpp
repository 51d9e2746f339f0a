#pragma once

#include <span>

#include "rcrae/linalg.hpp"

namespace rcrae::kernels {

/// rho <- (U_q ⊗ I) rho (U_q ⊗ I)†, in place. The serial variants are the
/// reference implementations; the omp variants split the independent 2x2
/// index blocks across threads and produce bit-identical results.
void apply_single_qubit_serial(Matrix& rho, int qubit, const Matrix2& u, int num_qubits);
void apply_single_qubit_omp(Matrix& rho, int qubit, const Matrix2& u, int num_qubits);

/// rho <- sum_k E_k rho E_k† for a single-qubit channel on `qubit`.
void apply_kraus_single_serial(Matrix& rho, int qubit, std::span<const Matrix2> ops,
                               int num_qubits);
void apply_kraus_single_omp(Matrix& rho, int qubit, std::span<const Matrix2> ops,
                            int num_qubits);

/// Ideal CNOT: symmetric permutation of rows and columns, in place.
void apply_cnot_serial(Matrix& rho, int control, int target, int num_qubits);
void apply_cnot_omp(Matrix& rho, int control, int target, int num_qubits);

/// rho <- u rho u† for a full-dimension unitary (noisy CNOT path).
void conjugate_dense(Matrix& rho, const Matrix& u);

}  // namespace rcrae::kernels
