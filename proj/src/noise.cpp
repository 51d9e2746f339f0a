#include "rcrae/noise.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rcrae/kernels.hpp"

namespace rcrae {

NoiseConfig NoiseConfig::linear_chain(int num_qubits, double xi_rad_s) {
  NoiseConfig cfg;
  for (int q = 0; q + 1 < num_qubits; ++q) {
    cfg.zz_pairs.emplace_back(q, q + 1);
    cfg.zz_strengths.push_back(xi_rad_s);
  }
  return cfg;
}

double NoiseConfig::zz_for(int a, int b) const {
  for (size_t i = 0; i < zz_pairs.size(); ++i) {
    const auto& [p, q] = zz_pairs[i];
    if ((p == a && q == b) || (p == b && q == a)) return zz_strengths[i];
  }
  return 0.0;
}

void NoiseConfig::validate() const {
  if (!(t1 > 0)) throw std::invalid_argument("noise: t1 must be > 0");
  if (!(t2 > 0)) throw std::invalid_argument("noise: t2 must be > 0");
  if (!(t_step > 0)) throw std::invalid_argument("noise: t_step must be > 0");
  if (!(t_gate > 0)) throw std::invalid_argument("noise: t_gate must be > 0");
  if (zz_pairs.size() != zz_strengths.size())
    throw std::invalid_argument("noise: zz pair/strength size mismatch");
  for (const auto& [a, b] : zz_pairs)
    if (a == b) throw std::invalid_argument("noise: zz pair with equal qubits");
  if (incoherent) {
    damping_kraus(t1, t2, t_step);
    damping_kraus(t1, t2, t_gate);
  }
}

double KrausChannel::completeness_error() const {
  Matrix2 sum = Matrix2::Zero();
  for (const Matrix2& e : ops) sum += e.adjoint() * e;
  return (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel damping_kraus(double t1, double t2, double t_step) {
  const double a = 1.0 - std::exp(-t_step / t1);
  const double b = 1.0 - std::exp(-t_step / t2);
  if (a + b > 1.0)
    throw std::invalid_argument(
        "damping channel: alpha + beta > 1 for T1=" + std::to_string(t1) +
        " s, T2=" + std::to_string(t2) + " s, t=" + std::to_string(t_step) + " s");
  KrausChannel ch;
  Matrix2 e1, e2, e3;
  e1 << 1, 0, 0, std::sqrt(1.0 - a - b);
  e2 << 0, std::sqrt(a), 0, 0;
  e3 << 0, 0, 0, std::sqrt(b);
  ch.ops = {e1, e2, e3};
  return ch;
}

DensityMatrix apply_incoherent(const DensityMatrix& rho, const KrausChannel& channel) {
  if (channel.ops.empty()) throw std::invalid_argument("apply_incoherent: empty channel");
  DensityMatrix out = rho;
  for (int q = 0; q < rho.num_qubits(); ++q)
    kernels::apply_kraus_single_serial(out.data(), q, channel.ops, rho.num_qubits());
  return out;
}

namespace {

Matrix embed_zz(int a, int b, int n) {
  const long long dim = dim_of(n);
  const long long abit = 1LL << (n - 1 - a);
  const long long bbit = 1LL << (n - 1 - b);
  Matrix m = Matrix::Zero(dim, dim);
  for (long long x = 0; x < dim; ++x) {
    const int sign = (std::popcount(static_cast<unsigned long long>(x & (abit | bbit))) & 1) ? -1 : 1;
    m(x, x) = sign;
  }
  return m;
}

}  // namespace

Matrix zz_hamiltonian(int control, int target, const NoiseConfig& cfg, int num_qubits) {
  const long long dim = dim_of(num_qubits);
  Matrix xi = Matrix::Zero(dim, dim);
  for (size_t i = 0; i < cfg.zz_pairs.size(); ++i) {
    const auto& [a, b] = cfg.zz_pairs[i];
    const bool is_pair = (a == control && b == target) || (a == target && b == control);
    const bool touches = a == control || a == target || b == control || b == target;
    if (is_pair || touches) xi += cfg.zz_strengths[i] * embed_zz(a, b, num_qubits);
  }
  return xi;
}

Matrix noisy_cnot_unitary(int control, int target, const NoiseConfig& cfg, int num_qubits) {
  using std::numbers::pi;
  const long long dim = dim_of(num_qubits);
  const double gamma = pi / (4.0 * cfg.t_gate);

  // Z on control, X on target.
  Matrix zx = Matrix::Zero(dim, dim);
  {
    const long long cbit = 1LL << (num_qubits - 1 - control);
    const long long tbit = 1LL << (num_qubits - 1 - target);
    for (long long x = 0; x < dim; ++x) {
      const double zsign = (x & cbit) ? -1.0 : 1.0;
      zx(x ^ tbit, x) = zsign;
    }
  }

  // The cross-resonance term carries the sign that reproduces the ideal
  // CNOT in the noise-free limit; the printed noisy form flips it.
  Matrix gen = -gamma * zx + zz_hamiltonian(control, target, cfg, num_qubits);

  Eigen::SelfAdjointEigenSolver<Matrix> es(gen);
  Matrix evolved = es.eigenvectors() *
                   (Complex(0, cfg.t_gate) * es.eigenvalues().array().cast<Complex>())
                       .exp()
                       .matrix()
                       .asDiagonal() *
                   es.eigenvectors().adjoint();

  Matrix2 zrot;  // exp(i pi/4 Z)
  zrot << std::polar(1.0, pi / 4), 0, 0, std::polar(1.0, -pi / 4);
  Matrix2 xrot;  // exp(i pi/4 X)
  const double c = std::cos(pi / 4), s = std::sin(pi / 4);
  xrot << c, Complex(0, s), Complex(0, s), c;

  Matrix u = embed_single_qubit(zrot, control, num_qubits) * evolved *
             embed_single_qubit(xrot, target, num_qubits);
  return std::polar(1.0, -pi / 4) * u;
}

}  // namespace rcrae
