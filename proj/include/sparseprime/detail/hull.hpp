#pragma once

// Exact beneath-beyond convex hull for full-dimensional integer point sets.

#include <cstddef>
#include <vector>

#include "sparseprime/linalg.hpp"

namespace sparseprime::detail {

using IntVector = std::vector<Integer>;

struct HullFacet {
  // Primitive outward normal: normal·x <= offset on the hull, with equality
  // exactly for the input points listed in `points`.
  IntVector normal;
  Integer offset;
  std::vector<std::size_t> points;
};

struct Hull {
  std::vector<HullFacet> facets;
  // Placing triangulation: full-dimensional simplices given by point indices.
  std::vector<std::vector<std::size_t>> simplices;
};

std::size_t affine_rank(const std::vector<IntVector>& points);

// Requires distinct points whose affine span is all of R^d, d >= 1.
Hull full_dimensional_hull(const std::vector<IntVector>& points);

// |det(p_1 - p_0, ..., p_d - p_0)|.
Integer simplex_volume(const std::vector<IntVector>& points,
                       const std::vector<std::size_t>& simplex);

Integer dot(const IntVector& a, const IntVector& b);

}  // namespace sparseprime::detail
