#include "rcrae/twirl.hpp"

#include <random>
#include <stdexcept>

#include "rcrae/rng.hpp"

namespace rcrae {

namespace {

struct ConjEntry {
  int sign;  // +1 or -1
  PauliLetter control, target;
};

// CNOT conjugation of two-qubit Paulis, C (P_c ⊗ P_t) C, indexed [c][t].
// Verified against the dense conjugation oracle in the twirl tests.
constexpr PauliLetter I = PauliLetter::I, X = PauliLetter::X, Y = PauliLetter::Y,
                      Z = PauliLetter::Z;
constexpr ConjEntry kCnotConj[4][4] = {
    /* I */ {{1, I, I}, {1, I, X}, {1, Z, Y}, {1, Z, Z}},
    /* X */ {{1, X, X}, {1, X, I}, {1, Y, Z}, {-1, Y, Y}},
    /* Y */ {{1, Y, X}, {1, Y, I}, {-1, X, Z}, {1, X, Y}},
    /* Z */ {{1, Z, I}, {1, Z, X}, {1, I, Y}, {1, I, Z}},
};

Gate pauli_gate(PauliLetter l, int qubit) {
  switch (l) {
    case PauliLetter::X: return Gate::single(GateKind::PauliX, qubit);
    case PauliLetter::Y: return Gate::single(GateKind::PauliY, qubit);
    case PauliLetter::Z: return Gate::single(GateKind::PauliZ, qubit);
    default: return Gate::single(GateKind::Identity, qubit);
  }
}

}  // namespace

PauliString pauli_conjugate_through_hard(const Cycle& hard, const PauliString& p) {
  if (hard.kind != CycleKind::Hard)
    throw std::invalid_argument("pauli conjugation: cycle is not hard");
  PauliString q = p.dagger();
  for (const Gate& g : hard.gates) {
    if (g.kind != GateKind::Cnot)
      throw std::invalid_argument("pauli conjugation: non-Clifford hard cycle");
    const ConjEntry& e =
        kCnotConj[static_cast<int>(q.factor(g.control()))][static_cast<int>(q.factor(g.target()))];
    q.set_factor(g.control(), e.control);
    q.set_factor(g.target(), e.target);
    if (e.sign < 0) q.multiply_phase(2);
  }
  return q;
}

Circuit twirl_once(const Circuit& c, std::uint64_t seed) {
  const int n = c.num_qubits;
  std::mt19937_64 eng = make_engine(seed);
  std::uniform_int_distribution<int> letter(0, 3);

  int last_easy = -1;
  for (int i = 0; i < static_cast<int>(c.cycles.size()); ++i)
    if (c.cycles[i].kind == CycleKind::Easy) last_easy = i;

  Circuit out;
  out.num_qubits = n;
  out.cycles.reserve(c.cycles.size());
  // Correction Pauli sitting after the last emitted cycle; its +/-1 phase is
  // a global phase and is dropped.
  PauliString carried = PauliString::identity(n);

  for (int i = 0; i < static_cast<int>(c.cycles.size()); ++i) {
    const Cycle& cy = c.cycles[i];
    if (cy.kind == CycleKind::Hard) {
      carried = pauli_conjugate_through_hard(cy, carried);
      out.cycles.push_back(cy);
      continue;
    }
    PauliString fresh = PauliString::identity(n);
    if (i != last_easy)
      for (int q = 0; q < n; ++q)
        fresh.set_factor(q, static_cast<PauliLetter>(letter(eng)));

    Cycle merged = Cycle::easy();
    std::vector<const Gate*> existing(n, nullptr);
    for (const Gate& g : cy.gates) existing[g.qubits[0]] = &g;
    for (int q = 0; q < n; ++q) {
      Gate fused = pauli_gate(carried.factor(q), q);
      if (existing[q]) fused = fuse_single_qubit(fused, *existing[q]);
      fused = fuse_single_qubit(fused, pauli_gate(fresh.factor(q), q));
      const bool had_gate = existing[q] != nullptr;
      if (fused.kind == GateKind::Identity && !had_gate) continue;
      merged.gates.push_back(fused);
    }
    out.cycles.push_back(std::move(merged));
    carried = fresh;
  }

  if (!carried.is_identity()) {
    // Input ended in a hard cycle: absorb the pending correction in a new
    // easy cycle so the result stays logically equivalent.
    Cycle tail = Cycle::easy();
    for (int q = 0; q < n; ++q)
      if (carried.factor(q) != PauliLetter::I)
        tail.gates.push_back(pauli_gate(carried.factor(q), q));
    out.cycles.push_back(std::move(tail));
  }
  return out;
}

std::vector<long long> allocate_shots(long long total, int duplicates) {
  if (duplicates < 1) throw std::invalid_argument("allocate_shots: need at least one duplicate");
  if (total < duplicates)
    throw std::invalid_argument("allocate_shots: fewer shots than duplicates");
  const long long base = total / duplicates;
  std::vector<long long> out(duplicates, base);
  out.back() = total - base * (duplicates - 1);
  return out;
}

TwirledEnsemble make_ensemble(const Circuit& c, int duplicates, long long total_shots,
                              std::uint64_t seed) {
  TwirledEnsemble ens;
  ens.bare = c;
  ens.seed = seed;
  ens.shots_per_duplicate = allocate_shots(total_shots, duplicates);
  ens.duplicates.reserve(duplicates);
  for (int i = 0; i < duplicates; ++i)
    ens.duplicates.push_back(twirl_once(c, derive_seed(seed, {static_cast<std::uint64_t>(i)})));
  return ens;
}

nlohmann::json ensemble_manifest(const TwirledEnsemble& ens) {
  nlohmann::ordered_json j;
  j["seed"] = ens.seed;
  j["duplicates"] = nlohmann::json::array();
  for (size_t i = 0; i < ens.duplicates.size(); ++i) {
    j["duplicates"].push_back({{"index", i},
                               {"seed", derive_seed(ens.seed, {i})},
                               {"shots", ens.shots_per_duplicate[i]}});
  }
  return j;
}

}  // namespace rcrae
