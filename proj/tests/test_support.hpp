#pragma once

// Test-only dense linear algebra, kept independent of the library's
// circuit/unitary code paths so it can serve as an oracle for them.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "rcrae/circuit.hpp"

namespace testsupport {

using rcrae::Complex;
using rcrae::Matrix;
using rcrae::Matrix2;

inline Matrix t_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Matrix2 t_pauli(char c) {
  Matrix2 m;
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("t_pauli");
  }
  return m;
}

inline Matrix t_pauli_string(const std::string& s) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : s) m = t_kron(m, Matrix(t_pauli(c)));
  return m;
}

inline Matrix t_embed1(const Matrix2& u, int qubit, int n) {
  Matrix m = Matrix::Identity(1, 1);
  for (int q = 0; q < n; ++q)
    m = t_kron(m, q == qubit ? Matrix(u) : Matrix(Matrix2::Identity()));
  return m;
}

inline Matrix t_cnot(int control, int target, int n) {
  const long long dim = 1LL << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (long long x = 0; x < dim; ++x) {
    long long y = x;
    if (x & (1LL << (n - 1 - control))) y ^= 1LL << (n - 1 - target);
    m(y, x) = 1.0;
  }
  return m;
}

inline Matrix2 t_rx(double t) {
  Matrix2 m;
  m << std::cos(t / 2), Complex(0, -std::sin(t / 2)), Complex(0, -std::sin(t / 2)),
      std::cos(t / 2);
  return m;
}

inline Matrix2 t_ry(double t) {
  Matrix2 m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

inline Matrix2 t_rz(double t) {
  Matrix2 m;
  m << std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2);
  return m;
}

inline Matrix2 t_hadamard() {
  Matrix2 m;
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

/// Taylor-series matrix exponential with scaling and squaring; oracle for
/// the eigendecomposition-based exponential in the noise module.
inline Matrix t_expm(const Matrix& a) {
  const double norm = a.cwiseAbs().sum();
  int squarings = 0;
  Matrix scaled = a;
  while (scaled.cwiseAbs().maxCoeff() > 0.25) {
    scaled /= 2.0;
    ++squarings;
  }
  (void)norm;
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Random normalized circuit ending in an easy cycle: alternating easy
/// layers of random rotations and hard layers of disjoint CNOTs.
inline rcrae::Circuit random_circuit(int num_qubits, int num_hard, std::mt19937_64& eng) {
  using namespace rcrae;
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);

  Circuit c;
  c.num_qubits = num_qubits;
  auto easy_layer = [&] {
    Cycle cy = Cycle::easy();
    for (int q = 0; q < num_qubits; ++q) {
      if (coin(eng) == 0) continue;
      const GateKind k = kind(eng) == 0   ? GateKind::RotX
                         : kind(eng) == 1 ? GateKind::RotY
                                          : GateKind::RotZ;
      cy.gates.push_back(Gate::rotation(k, angle(eng), q));
    }
    return cy;
  };
  c.cycles.push_back(easy_layer());
  for (int h = 0; h < num_hard; ++h) {
    Cycle hard = Cycle::hard({});
    std::vector<int> qs(num_qubits);
    for (int q = 0; q < num_qubits; ++q) qs[q] = q;
    std::shuffle(qs.begin(), qs.end(), eng);
    const int pairs = std::max(1, static_cast<int>(qs.size()) / 2 - coin(eng));
    for (int p = 0; p < pairs && 2 * p + 1 < num_qubits; ++p)
      hard.gates.push_back(Gate::cnot(qs[2 * p], qs[2 * p + 1]));
    c.cycles.push_back(std::move(hard));
    c.cycles.push_back(easy_layer());
  }
  return normalize_cycles(c);
}

/// Random density matrix (random PSD, trace 1).
inline Matrix random_density(int n, std::mt19937_64& eng) {
  const long long dim = 1LL << n;
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(dim, dim);
  for (long long i = 0; i < dim; ++i)
    for (long long j = 0; j < dim; ++j) a(i, j) = Complex(g(eng), g(eng));
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

}  // namespace testsupport
