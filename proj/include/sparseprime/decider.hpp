#pragma once

// Classifies the ideal generated by general Laurent polynomials with the given
// supports: unit ideal, prime (radical prime in positive characteristic), or
// a proper ideal whose radical is not prime.
//
// The system is generically prime iff every nonempty J has
// rank(∪_J A_j) >= |J| + 1, or rank == |J| and the mixed volume of
// (conv A_j)_{j∈J} in the saturated lattice is 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sparseprime/supports.hpp"

namespace sparseprime {

enum class VerdictKind {
  GenericUnitIdeal,
  GenericallyPrime,
  GenericallyNotPrime,
};

// "generic-unit-ideal", "generically-prime", "generically-not-prime".
std::string_view to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::GenericallyPrime;
  // Unit ideal: minimal J with rank < |J|. Not prime: minimal J with
  // rank == |J| and mixed volume >= 2.
  std::optional<SubsetWitness> witness;
  std::optional<std::int64_t> mixed_volume;
  std::string char_note;
};

struct DecideOptions {
  std::size_t enumeration_bound = kDefaultEnumerationBound;
  // Return GenericallyPrime straight away when the strengthened transversal
  // condition holds.
  bool dmit_fast_path = true;
};

Verdict decide(const SupportSystem& system, const DecideOptions& options = {});

// The largest K with rank(∪_K A_j) == |K| and restricted mixed volume 1
// (possibly empty). Throws PreconditionFailed unless the system is
// generically prime.
SubsetWitness maximal_unimodular_subset(
    const SupportSystem& system,
    std::size_t bound = kDefaultEnumerationBound);

// Contract the supports in K: project the remaining supports to
// Z^n / (span(∪_K A_j) ∩ Z^n) ≅ Z^(n-|K|) and normalize. Throws RankMismatch
// unless rank(∪_K A_j) == |K|. The result may have no supports left.
SupportSystem reduce_by(const SupportSystem& system, const SubsetWitness& k);

}  // namespace sparseprime
