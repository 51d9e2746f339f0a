#pragma once

#include <utility>
#include <vector>

#include "rcrae/density_matrix.hpp"
#include "rcrae/linalg.hpp"

namespace rcrae {

/// Device noise parameters. Times in seconds, couplings in rad/s.
struct NoiseConfig {
  double t1 = 84e-6;
  double t2 = 110e-6;
  double t_step = 100e-9;  // easy-cycle duration
  double t_gate = 400e-9;  // CNOT duration
  std::vector<std::pair<int, int>> zz_pairs;
  std::vector<double> zz_strengths;  // xi per pair, rad/s
  bool incoherent = true;
  bool coherent = true;

  /// Chain topology (0,1),(1,2),... with uniform coupling.
  static NoiseConfig linear_chain(int num_qubits, double xi_rad_s);

  /// Coupling for an unordered pair, 0 if absent.
  double zz_for(int a, int b) const;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct KrausChannel {
  std::vector<Matrix2> ops;

  /// max-norm of sum E†E - I.
  double completeness_error() const;
};

/// Combined amplitude-damping / dephasing channel:
/// E1 = diag(1, sqrt(1-a-b)), E2 = sqrt(a)|0><1|, E3 = sqrt(b)|1><1|
/// with a = 1-exp(-t/T1), b = 1-exp(-t/T2). Throws if a + b > 1.
KrausChannel damping_kraus(double t1, double t2, double t_step);

/// Applies the single-qubit channel to every qubit in sequence, which
/// equals the n-fold tensor-sum channel.
DensityMatrix apply_incoherent(const DensityMatrix& rho, const KrausChannel& channel);

/// Residual-ZZ generator for a CNOT on (control, target): the pair term
/// plus every coupled spectator term, embedded in the full 2^n space.
Matrix zz_hamiltonian(int control, int target, const NoiseConfig& cfg, int num_qubits);

/// Cross-resonance CNOT evolved for t_gate under the ZZ generator, embedded
/// in 2^n dims. With all couplings zero this is the ideal CNOT up to phase.
Matrix noisy_cnot_unitary(int control, int target, const NoiseConfig& cfg, int num_qubits);

}  // namespace rcrae
