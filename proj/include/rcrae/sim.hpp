#pragma once

#include <cstdint>
#include <optional>

#include "rcrae/circuit.hpp"
#include "rcrae/density_matrix.hpp"
#include "rcrae/noise.hpp"

namespace rcrae {

enum class Engine { Serial, Parallel };

struct ShotRecord {
  long long shots = 0;
  long long even_count = 0;
  std::optional<double> p_even_exact;
};

/// Evolves |0..0><0..0| through the circuit. Easy cycles apply their gates
/// then, with incoherent noise on, per-qubit damping over t_step; hard
/// cycles apply ideal or ZZ-perturbed CNOTs then damping over t_gate.
/// cfg == nullptr runs the exact noiseless circuit. The parallel engine
/// falls back to the serial kernels for small states or inside an
/// enclosing parallel region; both produce bit-identical states.
DensityMatrix run(const Circuit& c, const NoiseConfig* cfg, Engine engine = Engine::Parallel);

/// P(even parity) = (1 + tr(rho Z_S))/2 on the support S of P, for a state
/// already rotated by basis_change(P).
double parity_distribution(const DensityMatrix& rho, const Observable& p);

/// tr(rho P).
double expectation(const DensityMatrix& rho, const Observable& p);

/// Seeded binomial draw of even-parity counts.
ShotRecord sample_parities(double p_even, long long shots, std::uint64_t seed);

}  // namespace rcrae
