#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rcrae/linalg.hpp"

namespace rcrae {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter_char(PauliLetter l);
Matrix2 pauli_letter_matrix(PauliLetter l);

/// n-qubit Pauli operator with a tracked phase from {+1, -1, +i, -i},
/// stored as i^k with k in 0..3.
class PauliString {
 public:
  PauliString() = default;
  static PauliString identity(int num_qubits);
  /// Parses strings like "XIZY". Phase is +1.
  static PauliString parse(std::string_view s);

  int size() const { return static_cast<int>(factors_.size()); }
  PauliLetter factor(int qubit) const { return factors_[qubit]; }
  void set_factor(int qubit, PauliLetter l) { factors_[qubit] = l; }

  int phase_exponent() const { return phase_k_; }
  Complex phase() const;
  void multiply_phase(int k) { phase_k_ = (phase_k_ + k) % 4; }

  bool is_identity() const;
  PauliString dagger() const;

  Matrix matrix() const;
  std::string to_string() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<PauliLetter> factors_;
  std::uint8_t phase_k_ = 0;  // phase = i^k
};

/// Hermitian +/-1-eigenvalue measurement operator: a phase-free PauliString.
class Observable {
 public:
  explicit Observable(PauliString p);
  static Observable parse(std::string_view s) { return Observable(PauliString::parse(s)); }

  const PauliString& pauli() const { return pauli_; }
  int size() const { return pauli_.size(); }
  /// Qubits with a non-identity factor.
  std::vector<int> support() const;

 private:
  PauliString pauli_;
};

}  // namespace rcrae
