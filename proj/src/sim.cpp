#include "rcrae/sim.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include <omp.h>

#include "rcrae/kernels.hpp"
#include "rcrae/rng.hpp"

namespace rcrae {

namespace {

// The omp kernels only pay off once the matrix is large enough and when we
// are not already inside a parallel region (harness loops parallelize over
// experiment tasks).
bool use_omp(Engine engine, int n) {
  return engine == Engine::Parallel && n >= 5 && !omp_in_parallel();
}

void apply_channel_all_qubits(Matrix& rho, const KrausChannel& ch, int n, bool omp) {
  for (int q = 0; q < n; ++q) {
    if (omp)
      kernels::apply_kraus_single_omp(rho, q, ch.ops, n);
    else
      kernels::apply_kraus_single_serial(rho, q, ch.ops, n);
  }
}

}  // namespace

DensityMatrix run(const Circuit& c, const NoiseConfig* cfg, Engine engine) {
  if (c.num_qubits > kMaxDenseQubits)
    throw std::invalid_argument("run: circuit too large for dense simulation");
  const int n = c.num_qubits;
  DensityMatrix rho = DensityMatrix::ground_state(n);
  Matrix& m = rho.data();

  const bool incoherent = cfg && cfg->incoherent;
  const bool coherent = cfg && cfg->coherent;
  const bool omp = use_omp(engine, n);
  KrausChannel step_channel, gate_channel;
  if (incoherent) {
    step_channel = damping_kraus(cfg->t1, cfg->t2, cfg->t_step);
    gate_channel = damping_kraus(cfg->t1, cfg->t2, cfg->t_gate);
  }
  std::map<std::pair<int, int>, Matrix> cnot_cache;

  for (const Cycle& cy : c.cycles) {
    if (cy.kind == CycleKind::Easy) {
      for (const Gate& g : cy.gates) {
        if (g.kind == GateKind::Identity) continue;
        if (omp)
          kernels::apply_single_qubit_omp(m, g.qubits[0], g.matrix2(), n);
        else
          kernels::apply_single_qubit_serial(m, g.qubits[0], g.matrix2(), n);
      }
      if (incoherent) apply_channel_all_qubits(m, step_channel, n, omp);
    } else {
      for (const Gate& g : cy.gates) {
        if (coherent) {
          auto key = std::make_pair(g.control(), g.target());
          auto it = cnot_cache.find(key);
          if (it == cnot_cache.end())
            it = cnot_cache.emplace(key, noisy_cnot_unitary(key.first, key.second, *cfg, n)).first;
          kernels::conjugate_dense(m, it->second);
        } else if (omp) {
          kernels::apply_cnot_omp(m, g.control(), g.target(), n);
        } else {
          kernels::apply_cnot_serial(m, g.control(), g.target(), n);
        }
      }
      if (incoherent) apply_channel_all_qubits(m, gate_channel, n, omp);
    }
  }
  return rho;
}

double parity_distribution(const DensityMatrix& rho, const Observable& p) {
  const int n = rho.num_qubits();
  if (p.size() != n) throw std::invalid_argument("parity: observable size mismatch");
  unsigned long long mask = 0;
  for (int q : p.support()) mask |= 1ULL << (n - 1 - q);
  double z = 0.0;
  for (long long x = 0; x < rho.dim(); ++x) {
    const int sign = (std::popcount(static_cast<unsigned long long>(x) & mask) & 1) ? -1 : 1;
    z += sign * rho.data()(x, x).real();
  }
  return 0.5 * (1.0 + z);
}

double expectation(const DensityMatrix& rho, const Observable& p) {
  if (p.size() != rho.num_qubits())
    throw std::invalid_argument("expectation: observable size mismatch");
  const Matrix pm = p.pauli().matrix();
  return (rho.data() * pm).trace().real();
}

ShotRecord sample_parities(double p_even, long long shots, std::uint64_t seed) {
  if (!(p_even >= 0.0 && p_even <= 1.0))
    throw std::invalid_argument("sample_parities: p_even outside [0, 1]");
  std::mt19937_64 eng = make_engine(seed);
  std::binomial_distribution<long long> dist(shots, p_even);
  ShotRecord rec;
  rec.shots = shots;
  rec.even_count = dist(eng);
  rec.p_even_exact = p_even;
  return rec;
}

}  // namespace rcrae
