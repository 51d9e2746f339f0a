#include "rcrae/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <stdexcept>

namespace rcrae {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Matrix cnot_matrix(int control, int target, int n) {
  const long long dim = dim_of(n);
  Matrix m = Matrix::Zero(dim, dim);
  const long long cbit = 1LL << (n - 1 - control);
  const long long tbit = 1LL << (n - 1 - target);
  for (long long x = 0; x < dim; ++x) {
    long long y = (x & cbit) ? (x ^ tbit) : x;
    m(y, x) = 1.0;
  }
  return m;
}

}  // namespace

bool is_rotation(GateKind k) {
  return k == GateKind::RotX || k == GateKind::RotY || k == GateKind::RotZ;
}

Gate Gate::single(GateKind kind, int qubit) {
  Gate g;
  g.kind = kind;
  g.qubits = {qubit};
  return g;
}

Gate Gate::rotation(GateKind kind, double angle, int qubit) {
  Gate g;
  g.kind = kind;
  g.angle = angle;
  g.qubits = {qubit};
  return g;
}

Gate Gate::generic(const Matrix2& u, int qubit) {
  Gate g;
  g.kind = GateKind::Generic;
  g.unitary = u;
  g.qubits = {qubit};
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = GateKind::Cnot;
  g.qubits = {control, target};
  return g;
}

Matrix2 Gate::matrix2() const {
  Matrix2 m;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  switch (kind) {
    case GateKind::Identity: m << 1, 0, 0, 1; break;
    case GateKind::PauliX: m << 0, 1, 1, 0; break;
    case GateKind::PauliY: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case GateKind::PauliZ: m << 1, 0, 0, -1; break;
    case GateKind::Hadamard: {
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      break;
    }
    case GateKind::RotX: m << c, Complex(0, -s), Complex(0, -s), c; break;
    case GateKind::RotY: m << c, -s, s, c; break;
    case GateKind::RotZ: m << Complex(c, -s), 0, 0, Complex(c, s); break;
    case GateKind::Generic: return unitary;
    case GateKind::Cnot:
      throw std::logic_error("matrix2() called on a CNOT");
  }
  return m;
}

Gate Gate::adjoint() const {
  Gate g = *this;
  if (is_rotation(kind)) g.angle = -angle;
  if (kind == GateKind::Generic) g.unitary = unitary.adjoint();
  return g;
}

Cycle Cycle::easy(std::vector<Gate> gates) { return Cycle{CycleKind::Easy, std::move(gates)}; }
Cycle Cycle::hard(std::vector<Gate> gates) { return Cycle{CycleKind::Hard, std::move(gates)}; }

void Circuit::validate() const {
  require(num_qubits >= 1, "circuit: num_qubits must be positive");
  for (const Cycle& cy : cycles) {
    std::set<int> seen;
    for (const Gate& g : cy.gates) {
      for (int q : g.qubits) {
        require(q >= 0 && q < num_qubits, "circuit: qubit index out of range");
        require(seen.insert(q).second, "circuit: qubit reused within a cycle");
      }
      if (cy.kind == CycleKind::Easy) {
        require(g.is_single_qubit(), "circuit: two-qubit gate in easy cycle");
        require(g.qubits.size() == 1, "circuit: bad single-qubit arity");
        require(std::isfinite(g.angle), "circuit: non-finite angle");
      } else {
        require(g.kind == GateKind::Cnot, "circuit: non-CNOT gate in hard cycle");
        require(g.qubits.size() == 2 && g.qubits[0] != g.qubits[1],
                "circuit: CNOT must touch two distinct qubits");
      }
    }
  }
}

Circuit Circuit::adjoint() const {
  Circuit out;
  out.num_qubits = num_qubits;
  out.cycles.reserve(cycles.size());
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Cycle cy;
    cy.kind = it->kind;
    cy.gates.reserve(it->gates.size());
    for (const Gate& g : it->gates) cy.gates.push_back(g.adjoint());
    out.cycles.push_back(std::move(cy));
  }
  return out;
}

Gate fuse_single_qubit(const Gate& first, const Gate& second) {
  const int q = first.qubits[0];
  if (first.kind == GateKind::Identity) return second;
  if (second.kind == GateKind::Identity) return first;
  if (is_rotation(first.kind) && second.kind == first.kind)
    return Gate::rotation(first.kind, first.angle + second.angle, q);
  Matrix2 u = second.matrix2() * first.matrix2();
  if (phase_aligned_distance(Matrix(u), Matrix(Matrix2::Identity())) < 1e-12)
    return Gate::single(GateKind::Identity, q);
  return Gate::generic(u, q);
}

Circuit normalize_cycles(const Circuit& c) {
  Circuit out;
  out.num_qubits = c.num_qubits;
  std::vector<Gate> pending(c.num_qubits);
  std::vector<bool> touched(c.num_qubits, false);
  bool run_active = false;

  auto flush = [&] {
    if (!run_active) return;
    Cycle cy = Cycle::easy();
    for (int q = 0; q < c.num_qubits; ++q) {
      if (touched[q]) {
        cy.gates.push_back(pending[q]);
        pending[q] = Gate{};
        touched[q] = false;
      }
    }
    out.cycles.push_back(std::move(cy));
    run_active = false;
  };

  for (const Cycle& cy : c.cycles) {
    if (cy.kind == CycleKind::Easy) {
      run_active = true;
      for (const Gate& g : cy.gates) {
        const int q = g.qubits[0];
        pending[q] = touched[q] ? fuse_single_qubit(pending[q], g) : g;
        touched[q] = true;
      }
    } else {
      flush();
      out.cycles.push_back(cy);
    }
  }
  flush();
  return out;
}

Circuit build_h2_ansatz(double theta0) {
  require(std::isfinite(theta0), "h2 ansatz: theta0 must be finite");
  Circuit c;
  c.num_qubits = 4;
  c.cycles.push_back(Cycle::easy({Gate::single(GateKind::PauliX, 0),
                                  Gate::single(GateKind::PauliX, 1),
                                  Gate::rotation(GateKind::RotY, theta0, 2)}));
  c.cycles.push_back(Cycle::hard({Gate::cnot(2, 0)}));
  c.cycles.push_back(Cycle::hard({Gate::cnot(2, 1)}));
  c.cycles.push_back(Cycle::hard({Gate::cnot(2, 3)}));
  return normalize_cycles(c);
}

Circuit build_ldca(std::span<const double> th) {
  require(th.size() == 8, "ldca: expected exactly 8 angles");
  for (double t : th) require(std::isfinite(t), "ldca: non-finite angle");
  const double hp = kPi / 2;
  Circuit c;
  c.num_qubits = 2;
  auto g1 = [&](GateKind k, int q) { c.cycles.push_back(Cycle::easy({Gate::single(k, q)})); };
  auto rot = [&](GateKind k, double a, int q) {
    c.cycles.push_back(Cycle::easy({Gate::rotation(k, a, q)}));
  };
  auto cn = [&] { c.cycles.push_back(Cycle::hard({Gate::cnot(0, 1)})); };

  g1(GateKind::PauliX, 0);
  rot(GateKind::RotZ, th[0], 0);
  rot(GateKind::RotX, hp, 0);
  rot(GateKind::RotZ, th[1], 1);
  g1(GateKind::Hadamard, 1);
  cn(); rot(GateKind::RotZ, 2 * th[2], 1); cn();
  rot(GateKind::RotX, -hp, 0);
  g1(GateKind::Hadamard, 0);
  g1(GateKind::Hadamard, 1);
  rot(GateKind::RotX, hp, 1);
  cn(); rot(GateKind::RotZ, -2 * th[2], 1); cn();
  g1(GateKind::Hadamard, 0);
  rot(GateKind::RotX, -hp, 1);
  cn(); rot(GateKind::RotZ, 2 * th[3], 1); cn();
  rot(GateKind::RotX, hp, 0);
  rot(GateKind::RotX, hp, 1);
  cn();
  rot(GateKind::RotZ, 2 * th[4], 1);
  cn();
  rot(GateKind::RotX, -hp, 0);
  g1(GateKind::Hadamard, 0);
  rot(GateKind::RotX, -hp, 1);
  g1(GateKind::Hadamard, 1);
  cn(); rot(GateKind::RotZ, 2 * th[4], 1); cn();
  g1(GateKind::Hadamard, 0);
  g1(GateKind::Hadamard, 1);
  rot(GateKind::RotX, hp, 0);
  g1(GateKind::Hadamard, 1);
  cn(); rot(GateKind::RotZ, 2 * th[5], 1); cn();
  rot(GateKind::RotX, -hp, 0);
  g1(GateKind::Hadamard, 0);
  g1(GateKind::Hadamard, 1);
  rot(GateKind::RotX, hp, 1);
  cn(); rot(GateKind::RotZ, -2 * th[5], 1); cn();
  g1(GateKind::Hadamard, 0);
  rot(GateKind::RotX, -hp, 1);
  cn(); rot(GateKind::RotZ, 2 * th[6], 1); cn();
  rot(GateKind::RotX, hp, 0);
  rot(GateKind::RotX, hp, 1);
  cn(); rot(GateKind::RotZ, 2 * th[7], 1); cn();
  rot(GateKind::RotX, -hp, 0);
  g1(GateKind::Hadamard, 0);
  rot(GateKind::RotX, -hp, 1);
  g1(GateKind::Hadamard, 1);
  cn(); rot(GateKind::RotZ, 2 * th[7], 1); cn();
  g1(GateKind::Hadamard, 0);
  g1(GateKind::Hadamard, 1);
  return normalize_cycles(c);
}

Circuit build_reflection_r0(int num_qubits) {
  require(num_qubits >= 1, "r0: need at least one qubit");
  // exp(i pi |0..0><0..0|) expands over Z-subset terms, all with the same
  // coefficient pi/2^n; each term is an Rz between CNOT parity ladders and
  // subsets sharing the max qubit m are walked in Gray-code order.
  const double angle = -kPi / static_cast<double>(1LL << (num_qubits - 1));
  Circuit c;
  c.num_qubits = num_qubits;
  auto rz = [&](int q) { c.cycles.push_back(Cycle::easy({Gate::rotation(GateKind::RotZ, angle, q)})); };
  auto cnot = [&](int ctrl, int tgt) { c.cycles.push_back(Cycle::hard({Gate::cnot(ctrl, tgt)})); };
  for (int m = 0; m < num_qubits; ++m) {
    rz(m);
    unsigned long long parity = 0;
    for (unsigned long long i = 1; i < (1ULL << m); ++i) {
      const int j = std::countr_zero(i);
      cnot(j, m);
      parity ^= 1ULL << j;
      rz(m);
    }
    for (int j = 0; j < m; ++j)
      if ((parity >> j) & 1) cnot(j, m);
  }
  return normalize_cycles(c);
}

Circuit build_grover_iterate(const Circuit& a, const Observable& p) {
  require(a.num_qubits == p.size(), "grover iterate: qubit count mismatch");
  Circuit g;
  g.num_qubits = a.num_qubits;

  Cycle pauli_cycle = Cycle::easy();
  for (int q = 0; q < p.size(); ++q) {
    switch (p.pauli().factor(q)) {
      case PauliLetter::I: break;
      case PauliLetter::X: pauli_cycle.gates.push_back(Gate::single(GateKind::PauliX, q)); break;
      case PauliLetter::Y: pauli_cycle.gates.push_back(Gate::single(GateKind::PauliY, q)); break;
      case PauliLetter::Z: pauli_cycle.gates.push_back(Gate::single(GateKind::PauliZ, q)); break;
    }
  }
  g.cycles.push_back(std::move(pauli_cycle));

  const Circuit a_dag = a.adjoint();
  const Circuit r0 = build_reflection_r0(a.num_qubits);
  g.cycles.insert(g.cycles.end(), a_dag.cycles.begin(), a_dag.cycles.end());
  g.cycles.insert(g.cycles.end(), r0.cycles.begin(), r0.cycles.end());
  g.cycles.insert(g.cycles.end(), a.cycles.begin(), a.cycles.end());
  return normalize_cycles(g);
}

Circuit build_enhanced_circuit(const Circuit& a, const Observable& p, int layers) {
  require(layers >= 0, "enhanced circuit: layer count must be >= 0");
  Circuit c;
  c.num_qubits = a.num_qubits;
  c.cycles = a.cycles;
  if (layers > 0) {
    const Circuit g = build_grover_iterate(a, p);
    for (int l = 0; l < layers; ++l)
      c.cycles.insert(c.cycles.end(), g.cycles.begin(), g.cycles.end());
  }
  c.cycles.push_back(basis_change(p));
  return normalize_cycles(c);
}

Cycle basis_change(const Observable& p) {
  require(!p.pauli().is_identity(), "basis change: observable is all-identity");
  Cycle cy = Cycle::easy();
  for (int q = 0; q < p.size(); ++q) {
    switch (p.pauli().factor(q)) {
      case PauliLetter::X: cy.gates.push_back(Gate::single(GateKind::Hadamard, q)); break;
      case PauliLetter::Y: cy.gates.push_back(Gate::rotation(GateKind::RotX, kPi / 2, q)); break;
      default: break;
    }
  }
  return cy;
}

int two_qubit_gate_count(const Circuit& c) {
  int n = 0;
  for (const Cycle& cy : c.cycles)
    for (const Gate& g : cy.gates)
      if (g.kind == GateKind::Cnot) ++n;
  return n;
}

Matrix unitary_of(const Circuit& c) {
  if (c.num_qubits > kMaxDenseQubits)
    throw std::invalid_argument("unitary_of: circuit too large for dense form");
  const long long dim = dim_of(c.num_qubits);
  Matrix u = Matrix::Identity(dim, dim);
  for (const Cycle& cy : c.cycles) {
    for (const Gate& g : cy.gates) {
      if (g.kind == GateKind::Cnot)
        u = cnot_matrix(g.control(), g.target(), c.num_qubits) * u;
      else
        u = embed_single_qubit(g.matrix2(), g.qubits[0], c.num_qubits) * u;
    }
  }
  return u;
}

namespace {

// ZYZ Euler angles of a 2x2 unitary, global phase dropped.
std::array<double, 3> zyz_angles(const Matrix2& u) {
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const Complex phase = std::sqrt(det);
  Matrix2 v = u / phase;
  const double beta = 2.0 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
  double sum = 0, diff = 0;  // (alpha+gamma)/2, (alpha-gamma)/2
  if (std::abs(v(0, 0)) > 1e-12) sum = -std::arg(v(0, 0));
  if (std::abs(v(1, 0)) > 1e-12) diff = std::arg(v(1, 0));
  return {sum + diff, beta, sum - diff};
}

std::string format_angle(double a) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", a);
  return buf;
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::string out;
  for (const Cycle& cy : c.cycles) {
    out += cy.kind == CycleKind::Easy ? "easy:" : "hard:";
    for (const Gate& g : cy.gates) {
      out += ' ';
      switch (g.kind) {
        case GateKind::Identity: out += "id"; break;
        case GateKind::PauliX: out += "x"; break;
        case GateKind::PauliY: out += "y"; break;
        case GateKind::PauliZ: out += "z"; break;
        case GateKind::Hadamard: out += "h"; break;
        case GateKind::RotX: out += "rx(" + format_angle(g.angle) + ")"; break;
        case GateKind::RotY: out += "ry(" + format_angle(g.angle) + ")"; break;
        case GateKind::RotZ: out += "rz(" + format_angle(g.angle) + ")"; break;
        case GateKind::Generic: {
          auto [al, be, ga] = zyz_angles(g.unitary);
          out += "u(" + format_angle(al) + "," + format_angle(be) + "," +
                 format_angle(ga) + ")";
          break;
        }
        case GateKind::Cnot: out += "cnot"; break;
      }
      out += '@' + std::to_string(g.qubits[0]);
      if (g.qubits.size() == 2) out += ',' + std::to_string(g.qubits[1]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace rcrae
