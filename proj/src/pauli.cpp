#include "rcrae/pauli.hpp"

#include <stdexcept>

namespace rcrae {

char pauli_letter_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

Matrix2 pauli_letter_matrix(PauliLetter l) {
  Matrix2 m;
  switch (l) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

PauliString PauliString::identity(int num_qubits) {
  PauliString p;
  p.factors_.assign(num_qubits, PauliLetter::I);
  return p;
}

PauliString PauliString::parse(std::string_view s) {
  PauliString p;
  p.factors_.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'I': case 'i': p.factors_.push_back(PauliLetter::I); break;
      case 'X': case 'x': p.factors_.push_back(PauliLetter::X); break;
      case 'Y': case 'y': p.factors_.push_back(PauliLetter::Y); break;
      case 'Z': case 'z': p.factors_.push_back(PauliLetter::Z); break;
      default:
        throw std::invalid_argument("pauli string: unknown letter '" +
                                    std::string(1, c) + "'");
    }
  }
  return p;
}

Complex PauliString::phase() const {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_k_];
}

bool PauliString::is_identity() const {
  for (auto f : factors_)
    if (f != PauliLetter::I) return false;
  return true;
}

PauliString PauliString::dagger() const {
  PauliString p = *this;
  // The letter product is Hermitian, so only the phase conjugates.
  p.phase_k_ = (4 - phase_k_) % 4;
  return p;
}

Matrix PauliString::matrix() const {
  Matrix m = Matrix::Identity(1, 1) * phase();
  for (auto f : factors_) m = kron(m, pauli_letter_matrix(f));
  return m;
}

std::string PauliString::to_string() const {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string s = prefix[phase_k_];
  for (auto f : factors_) s += pauli_letter_char(f);
  return s;
}

Observable::Observable(PauliString p) : pauli_(std::move(p)) {
  if (pauli_.phase_exponent() != 0)
    throw std::invalid_argument("observable: phase must be +1");
}

std::vector<int> Observable::support() const {
  std::vector<int> qs;
  for (int q = 0; q < pauli_.size(); ++q)
    if (pauli_.factor(q) != PauliLetter::I) qs.push_back(q);
  return qs;
}

}  // namespace rcrae
