#pragma once

// The strengthened transversal condition: rank(∪_{j∈J} A_j) >= |J| + 1 for
// every nonempty J, equivalently, for each j there are v_1 ∈ A_1, ...,
// v_{j-1} ∈ A_{j-1} and u_1, u_2 ∈ A_j that are linearly independent.

#include <cstddef>
#include <optional>
#include <vector>

#include "sparseprime/supports.hpp"

namespace sparseprime {

struct DmitWitness {
  std::size_t support;               // j, 0-based
  std::vector<LatticePoint> earlier;  // v_i ∈ A_i for i < j
  LatticePoint first;                 // u_1 ∈ A_j
  LatticePoint second;                // u_2 ∈ A_j
};

struct DmitReport {
  bool holds = false;
  // Some J with rank(∪_J A_j) <= |J|; not necessarily minimal.
  std::optional<SubsetWitness> violating_set;
  std::optional<std::vector<DmitWitness>> certificate;
};

// Polynomial-time check: for every j and every nonzero u ∈ A_j, the
// projections of A_1..A_j along u must have an independent transversal.
DmitReport is_dmit(const SupportSystem& system);

// Smallest (then lexicographically first) nonempty J with
// rank(∪_J A_j) <= |J|, by enumeration.
std::optional<SubsetWitness> dmit_bruteforce(
    const SupportSystem& system, std::size_t bound = kDefaultEnumerationBound);

}  // namespace sparseprime
