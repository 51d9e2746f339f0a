#pragma once

#include "rcrae/linalg.hpp"

namespace rcrae {

/// Dense 2^n x 2^n Hermitian trace-1 operator.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, Matrix m);
  static DensityMatrix ground_state(int num_qubits);
  static DensityMatrix maximally_mixed(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  long long dim() const { return m_.rows(); }
  Matrix& data() { return m_; }
  const Matrix& data() const { return m_; }

  double trace_error() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;
  double purity() const;

 private:
  int num_qubits_;
  Matrix m_;
};

}  // namespace rcrae
