// Kernel and end-to-end throughput: serial reference vs OpenMP variants.

#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include <random>

#include "rcrae/circuit.hpp"
#include "rcrae/kernels.hpp"
#include "rcrae/noise.hpp"
#include "rcrae/sim.hpp"

using namespace rcrae;

namespace {

Matrix random_density(int n, std::mt19937_64& eng) {
  const long long dim = 1LL << n;
  std::normal_distribution<double> g;
  Matrix a(dim, dim);
  for (long long i = 0; i < dim; ++i)
    for (long long j = 0; j < dim; ++j) a(i, j) = Complex(g(eng), g(eng));
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

template <typename F>
double time_loop(int reps, F&& body) {
  const double t0 = omp_get_wtime();
  for (int r = 0; r < reps; ++r) body();
  return (omp_get_wtime() - t0) / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 2000;
  std::mt19937_64 eng(1);
  const KrausChannel ch = damping_kraus(84e-6, 110e-6, 100e-9);
  Matrix2 h;
  h << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);

  std::printf("threads: %d, reps per cell: %d\n", omp_get_max_threads(), reps);
  {  // spin up the thread team before timing
    Matrix warm = random_density(6, eng);
    for (int i = 0; i < 50; ++i) kernels::apply_single_qubit_omp(warm, 0, h, 6);
  }
  std::printf("%-3s %-22s %12s %12s %8s\n", "n", "kernel", "serial[us]", "omp[us]", "speedup");
  for (int n = 2; n <= 6; ++n) {
    Matrix rho = random_density(n, eng);
    const int q = n / 2;
    const int c = 0, t = n - 1;

    const double s1 = time_loop(reps, [&] { kernels::apply_single_qubit_serial(rho, q, h, n); });
    const double p1 = time_loop(reps, [&] { kernels::apply_single_qubit_omp(rho, q, h, n); });
    std::printf("%-3d %-22s %12.2f %12.2f %8.2f\n", n, "single-qubit unitary", s1 * 1e6, p1 * 1e6,
                s1 / p1);

    const double s2 =
        time_loop(reps, [&] { kernels::apply_kraus_single_serial(rho, q, ch.ops, n); });
    const double p2 = time_loop(reps, [&] { kernels::apply_kraus_single_omp(rho, q, ch.ops, n); });
    std::printf("%-3d %-22s %12.2f %12.2f %8.2f\n", n, "single-qubit channel", s2 * 1e6, p2 * 1e6,
                s2 / p2);

    const double s3 = time_loop(reps, [&] { kernels::apply_cnot_serial(rho, c, t, n); });
    const double p3 = time_loop(reps, [&] { kernels::apply_cnot_omp(rho, c, t, n); });
    std::printf("%-3d %-22s %12.2f %12.2f %8.2f\n", n, "cnot permutation", s3 * 1e6, p3 * 1e6,
                s3 / p3);
  }

  // end to end: 6-qubit circuit with damping on every cycle
  const int n6 = 6;
  Circuit circ;
  circ.num_qubits = n6;
  for (int layer = 0; layer < 12; ++layer) {
    Cycle easy = Cycle::easy();
    for (int q = 0; q < n6; ++q)
      easy.gates.push_back(Gate::rotation(GateKind::RotY, 0.1 * (layer + q + 1), q));
    circ.cycles.push_back(std::move(easy));
    Cycle hard = Cycle::hard({});
    for (int q = layer % 2; q + 1 < n6; q += 2) hard.gates.push_back(Gate::cnot(q, q + 1));
    circ.cycles.push_back(std::move(hard));
  }
  circ = normalize_cycles(circ);
  NoiseConfig cfg = NoiseConfig::linear_chain(n6, 0.0);
  cfg.coherent = false;
  const int runs = std::max(1, reps / 100);
  const double es = time_loop(runs, [&] { (void)run(circ, &cfg, Engine::Serial); });
  const double ep = time_loop(runs, [&] { (void)run(circ, &cfg, Engine::Parallel); });
  std::printf("%-3d %-22s %12.2f %12.2f %8.2f\n", n6, "damped 12-layer run", es * 1e6, ep * 1e6,
              es / ep);
  return 0;
}
