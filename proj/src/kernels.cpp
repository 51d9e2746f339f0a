#include "rcrae/kernels.hpp"

namespace rcrae::kernels {

namespace {

// k-th index with a 0 inserted at bit position `pos`.
inline long long spread(long long k, int pos) {
  const long long low = k & ((1LL << pos) - 1);
  return ((k >> pos) << (pos + 1)) | low;
}

template <bool Parallel>
void apply_single_qubit_impl(Matrix& rho, int qubit, const Matrix2& u, int num_qubits) {
  const int pos = num_qubits - 1 - qubit;
  const long long bit = 1LL << pos;
  const long long half = rho.rows() / 2;
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  const Complex c00 = std::conj(u00), c01 = std::conj(u01), c10 = std::conj(u10),
                c11 = std::conj(u11);
#pragma omp parallel for schedule(static) if (Parallel)
  for (long long kc = 0; kc < half; ++kc) {
    const long long c0 = spread(kc, pos);
    const long long c1 = c0 | bit;
    for (long long kr = 0; kr < half; ++kr) {
      const long long r0 = spread(kr, pos);
      const long long r1 = r0 | bit;
      const Complex b00 = rho(r0, c0), b01 = rho(r0, c1);
      const Complex b10 = rho(r1, c0), b11 = rho(r1, c1);
      // U B
      const Complex t00 = u00 * b00 + u01 * b10;
      const Complex t01 = u00 * b01 + u01 * b11;
      const Complex t10 = u10 * b00 + u11 * b10;
      const Complex t11 = u10 * b01 + u11 * b11;
      // (U B) U†
      rho(r0, c0) = t00 * c00 + t01 * c01;
      rho(r0, c1) = t00 * c10 + t01 * c11;
      rho(r1, c0) = t10 * c00 + t11 * c01;
      rho(r1, c1) = t10 * c10 + t11 * c11;
    }
  }
}

template <bool Parallel>
void apply_kraus_single_impl(Matrix& rho, int qubit, std::span<const Matrix2> ops,
                             int num_qubits) {
  const int pos = num_qubits - 1 - qubit;
  const long long bit = 1LL << pos;
  const long long half = rho.rows() / 2;
#pragma omp parallel for schedule(static) if (Parallel)
  for (long long kc = 0; kc < half; ++kc) {
    const long long c0 = spread(kc, pos);
    const long long c1 = c0 | bit;
    for (long long kr = 0; kr < half; ++kr) {
      const long long r0 = spread(kr, pos);
      const long long r1 = r0 | bit;
      const Complex b00 = rho(r0, c0), b01 = rho(r0, c1);
      const Complex b10 = rho(r1, c0), b11 = rho(r1, c1);
      Complex a00 = 0, a01 = 0, a10 = 0, a11 = 0;
      for (const Matrix2& e : ops) {
        const Complex e00 = e(0, 0), e01 = e(0, 1), e10 = e(1, 0), e11 = e(1, 1);
        const Complex t00 = e00 * b00 + e01 * b10;
        const Complex t01 = e00 * b01 + e01 * b11;
        const Complex t10 = e10 * b00 + e11 * b10;
        const Complex t11 = e10 * b01 + e11 * b11;
        a00 += t00 * std::conj(e00) + t01 * std::conj(e01);
        a01 += t00 * std::conj(e10) + t01 * std::conj(e11);
        a10 += t10 * std::conj(e00) + t11 * std::conj(e01);
        a11 += t10 * std::conj(e10) + t11 * std::conj(e11);
      }
      rho(r0, c0) = a00;
      rho(r0, c1) = a01;
      rho(r1, c0) = a10;
      rho(r1, c1) = a11;
    }
  }
}

template <bool Parallel>
void apply_cnot_impl(Matrix& rho, int control, int target, int num_qubits) {
  const long long dim = rho.rows();
  const long long cbit = 1LL << (num_qubits - 1 - control);
  const long long tbit = 1LL << (num_qubits - 1 - target);
  // rho' = P rho P with P the CNOT involution; each unordered entry pair is
  // swapped by exactly one (i, j) owner, so the loop is race-free.
#pragma omp parallel for schedule(static) if (Parallel)
  for (long long i = 0; i < dim; ++i) {
    const long long pi = (i & cbit) ? (i ^ tbit) : i;
    for (long long j = 0; j < dim; ++j) {
      const long long pj = (j & cbit) ? (j ^ tbit) : j;
      if (pi * dim + pj > i * dim + j) std::swap(rho(i, j), rho(pi, pj));
    }
  }
}

}  // namespace

void apply_single_qubit_serial(Matrix& rho, int qubit, const Matrix2& u, int num_qubits) {
  apply_single_qubit_impl<false>(rho, qubit, u, num_qubits);
}
void apply_single_qubit_omp(Matrix& rho, int qubit, const Matrix2& u, int num_qubits) {
  apply_single_qubit_impl<true>(rho, qubit, u, num_qubits);
}

void apply_kraus_single_serial(Matrix& rho, int qubit, std::span<const Matrix2> ops,
                               int num_qubits) {
  apply_kraus_single_impl<false>(rho, qubit, ops, num_qubits);
}
void apply_kraus_single_omp(Matrix& rho, int qubit, std::span<const Matrix2> ops,
                            int num_qubits) {
  apply_kraus_single_impl<true>(rho, qubit, ops, num_qubits);
}

void apply_cnot_serial(Matrix& rho, int control, int target, int num_qubits) {
  apply_cnot_impl<false>(rho, control, target, num_qubits);
}
void apply_cnot_omp(Matrix& rho, int control, int target, int num_qubits) {
  apply_cnot_impl<true>(rho, control, target, num_qubits);
}

void conjugate_dense(Matrix& rho, const Matrix& u) {
  rho = u * rho * u.adjoint();
}

}  // namespace rcrae::kernels
