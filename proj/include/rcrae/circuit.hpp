#pragma once

#include <span>
#include <string>
#include <vector>

#include "rcrae/linalg.hpp"
#include "rcrae/pauli.hpp"

namespace rcrae {

enum class GateKind {
  Identity,
  PauliX,
  PauliY,
  PauliZ,
  Hadamard,
  RotX,
  RotY,
  RotZ,
  Generic,  // explicit 2x2 unitary, produced by single-qubit fusion
  Cnot,
};

bool is_rotation(GateKind k);

struct Gate {
  GateKind kind = GateKind::Identity;
  std::vector<int> qubits;  // one entry, or {control, target} for Cnot
  double angle = 0.0;       // rotations only
  Matrix2 unitary;          // Generic only

  static Gate single(GateKind kind, int qubit);
  static Gate rotation(GateKind kind, double angle, int qubit);
  static Gate generic(const Matrix2& u, int qubit);
  static Gate cnot(int control, int target);

  bool is_single_qubit() const { return kind != GateKind::Cnot; }
  int control() const { return qubits[0]; }
  int target() const { return qubits[1]; }

  /// 2x2 matrix of a single-qubit gate.
  Matrix2 matrix2() const;
  Gate adjoint() const;
};

enum class CycleKind { Easy, Hard };

struct Cycle {
  CycleKind kind = CycleKind::Easy;
  std::vector<Gate> gates;

  static Cycle easy(std::vector<Gate> gates = {});
  static Cycle hard(std::vector<Gate> gates);
};

/// Ordered easy/hard cycles over n qubits. Easy cycles hold at most one
/// single-qubit gate per qubit; hard cycles hold CNOTs on disjoint pairs.
struct Circuit {
  int num_qubits = 0;
  std::vector<Cycle> cycles;

  /// Throws std::invalid_argument on any violated cycle invariant.
  void validate() const;
  Circuit adjoint() const;
};

/// Minimal-basis 4-qubit hydrogen ansatz: X q0, X q1, RY(theta0) q2, then
/// CNOTs from q2 onto q0, q1, q3.
Circuit build_h2_ansatz(double theta0);

/// 2-qubit low-depth circuit ansatz with 20 CNOTs; takes exactly 8 angles.
Circuit build_ldca(std::span<const double> thetas);

/// Reflection about |0...0>, built from Rz gates and CNOT parity ladders
/// (Gray-code subset walk); equals diag(1,-1,...,-1) up to global phase
/// and uses 2^n - 2 CNOTs.
Circuit build_reflection_r0(int num_qubits);

/// Grover iterate G = A . R0 . A^dag . P (P applied first).
Circuit build_grover_iterate(const Circuit& a, const Observable& p);

/// A followed by `layers` Grover iterates and the measurement basis change.
Circuit build_enhanced_circuit(const Circuit& a, const Observable& p, int layers);

/// Easy cycle rotating each non-identity factor of P into the computational
/// basis (H for X, RX(pi/2) for Y). Throws on an all-identity observable.
Cycle basis_change(const Observable& p);

/// Fuses runs of adjacent easy cycles (per-qubit 2x2 products); the result
/// has no two adjacent easy cycles and the same unitary up to global phase.
Circuit normalize_cycles(const Circuit& c);

int two_qubit_gate_count(const Circuit& c);

/// Dense 2^n x 2^n unitary; throws for n > 6.
Matrix unitary_of(const Circuit& c);

/// One line per cycle: "easy: h@0 rz(1.5)@2" / "hard: cnot@0,1".
std::string to_text(const Circuit& c);

/// Product of two single-qubit gates on the same qubit, `second` applied
/// after `first`. Same-axis rotations add; near-identity products collapse
/// to Identity; anything else becomes a Generic gate.
Gate fuse_single_qubit(const Gate& first, const Gate& second);

}  // namespace rcrae
