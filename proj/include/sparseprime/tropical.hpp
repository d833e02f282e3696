#pragma once

// Stable intersections of tropical hypersurfaces (min-plus convention) via
// the regular mixed subdivision of A_1 + ... + A_k induced by the lifts.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sparseprime/supports.hpp"

namespace sparseprime {

// Tropical polynomials min_{a∈A_j} (<c, a> + ω_j(a)); lifts[j][i] is the
// coefficient of system[j][i].
struct TropicalData {
  SupportSystem system;
  Lifts lifts;
};

// A cell σ_1 + ... + σ_k of the mixed subdivision. pieces[j] lists indices
// into system[j]; every σ_j is the argmin of <functional, a> + ω_j(a).
struct MixedCell {
  std::vector<std::vector<std::size_t>> pieces;
  std::size_t total_dim = 0;
  std::vector<std::size_t> piece_dims;
  std::size_t dual_dim = 0;
  std::vector<Rational> functional;

  friend bool operator==(const MixedCell&, const MixedCell&) = default;
};

struct StableIntersectionComplex {
  std::vector<MixedCell> facets;  // dual_dim == n - k
  std::vector<MixedCell> ridges;  // dual_dim == n - k - 1
  // (facet, ridge) index pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> incidence;
};

// Throws DimensionMismatch when the lifts do not match the supports.
void validate(const TropicalData& data);

// Every cell of the subdivision (lower faces of the lifted Minkowski sum),
// sorted by total_dim and then by pieces.
std::vector<MixedCell> mixed_subdivision(const TropicalData& data);

// Cells whose dual lies in the stable intersection: dim(Σ_{j∈J} σ_j) >= |J|
// for every nonempty J. Empty when no independent transversal exists.
StableIntersectionComplex stable_intersection(const TropicalData& data);

bool connected_through_codim_one(const StableIntersectionComplex& complex);

struct CorollaryReport {
  bool condition_holds = false;
  bool ctc1 = false;
  bool consistent = true;  // condition_holds implies ctc1
};

CorollaryReport corollary_check(const TropicalData& data,
                                std::size_t bound = kDefaultEnumerationBound);

// Lifts p/denominator with p uniform in [-range*denominator, range*denominator].
Lifts random_lifts(const SupportSystem& system, std::uint64_t seed,
                   std::int64_t range = 10, std::int64_t denominator = 1);

}  // namespace sparseprime
