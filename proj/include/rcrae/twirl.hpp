#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcrae/circuit.hpp"
#include "rcrae/pauli.hpp"

namespace rcrae {

/// A bare circuit with N logically equivalent Pauli-twirled duplicates and
/// their shot allocation.
struct TwirledEnsemble {
  Circuit bare;
  std::vector<Circuit> duplicates;
  std::vector<long long> shots_per_duplicate;
  std::uint64_t seed = 0;
};

/// Conjugates a Pauli string through a CNOT-only hard cycle (H P† H†).
/// The result is again a Pauli string with a +/-1 phase.
PauliString pauli_conjugate_through_hard(const Cycle& hard, const PauliString& p);

/// One random duplicate: a fresh uniform Pauli is fused after every easy
/// cycle except the final one, and its conjugate correction is fused into
/// the next easy cycle. The output keeps the cycle structure of the input
/// and equals its unitary up to global phase.
Circuit twirl_once(const Circuit& c, std::uint64_t seed);

/// First N-1 entries floor(M/N), last entry the balance; sums to M.
std::vector<long long> allocate_shots(long long total, int duplicates);

TwirledEnsemble make_ensemble(const Circuit& c, int duplicates, long long total_shots,
                              std::uint64_t seed);

/// Per-duplicate index, derived seed and shot count.
nlohmann::json ensemble_manifest(const TwirledEnsemble& ens);

}  // namespace rcrae
