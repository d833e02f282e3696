#pragma once

// Lattice polytopes, normalized volumes, Minkowski sums and mixed volumes,
// all computed exactly.
//
// Volumes are lattice-normalized: a d-polytope has volume d! times its
// Euclidean volume, so unimodular simplices have volume 1. Mixed volumes are
// normalized so that m unit simplices in Z^m have mixed volume 1, which makes
// the mixed volume the generic number of torus roots.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sparseprime/supports.hpp"

namespace sparseprime {

class LatticePolytope {
 public:
  // Vertices sorted lexicographically.
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t dim() const { return dim_; }
  std::size_t ambient_dimension() const { return ambient_; }

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  friend LatticePolytope convex_hull(std::span<const LatticePoint> points);

  std::vector<LatticePoint> vertices_;
  std::size_t dim_ = 0;
  std::size_t ambient_ = 0;
};

struct MixedVolume {
  std::int64_t value = 0;
  friend bool operator==(const MixedVolume&, const MixedVolume&) = default;
};

LatticePolytope convex_hull(std::span<const LatticePoint> points);

// Throws NotFullDimensional unless dim == ambient dimension.
std::int64_t normalized_volume(const LatticePolytope& polytope);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

// Inclusion-exclusion over Minkowski sums of m polytopes in Z^m. The empty
// collection has mixed volume 1.
MixedVolume mixed_volume(std::span<const LatticePolytope> polytopes);

// Mixed volume of (conv A_j)_{j∈J} inside the saturated lattice of
// span(∪_J A_j). Requires rank(∪_J A_j) == |J|; throws RankMismatch
// otherwise.
MixedVolume restricted_mixed_volume(const SupportSystem& system,
                                    const SubsetWitness& subset);

// Same, with a caller-supplied Z-basis of the saturated lattice.
MixedVolume restricted_mixed_volume(const SupportSystem& system,
                                    const SubsetWitness& subset,
                                    std::span<const LatticePoint> basis);

}  // namespace sparseprime
