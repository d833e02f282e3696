#pragma once

// Independent transversals of a support system: a choice u_j ∈ A_j, one per
// support, of linearly independent vectors. Decided by intersecting the
// linear matroid on all nonzero support points with the partition matroid
// that allows one point per support.

#include <cstddef>
#include <optional>
#include <vector>

#include "sparseprime/supports.hpp"

namespace sparseprime {

struct TransversalChoice {
  std::size_t support;  // 0-based
  LatticePoint point;

  friend bool operator==(const TransversalChoice&,
                         const TransversalChoice&) = default;
};

struct PartialTransversal {
  std::size_t size = 0;
  std::vector<TransversalChoice> choices;  // sorted by support
  // When size < k: a subset J attaining rank(∪_J A_j) + k - |J| == size.
  std::optional<SubsetWitness> tight_set;
};

PartialTransversal max_partial_transversal(const SupportSystem& system);

bool has_independent_transversal(const SupportSystem& system);

// Smallest (then lexicographically first) nonempty J with
// rank(∪_J A_j) < |J|. Throws TooLarge when k exceeds `bound`.
std::optional<SubsetWitness> rank_condition_violation(
    const SupportSystem& system, std::size_t bound = kDefaultEnumerationBound);

}  // namespace sparseprime
