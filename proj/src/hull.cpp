#include "sparseprime/detail/hull.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sparseprime/error.hpp"

namespace sparseprime::detail {

namespace {

IntVector difference(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

struct BoundaryFacet {
  std::vector<std::size_t> vertices;  // sorted, d of them
  IntVector normal;
  Integer offset;
};

// Normal of the hyperplane through d points in R^d by cofactor expansion.
IntVector hyperplane_normal(const std::vector<IntVector>& points,
                            const std::vector<std::size_t>& vertices) {
  const std::size_t d = points.front().size();
  std::vector<IntVector> rows;
  for (std::size_t i = 1; i < vertices.size(); ++i)
    rows.push_back(difference(points[vertices[i]], points[vertices[0]]));
  IntVector normal(d);
  for (std::size_t c = 0; c < d; ++c) {
    IntMatrix minor(d - 1, d - 1);
    for (std::size_t r = 0; r + 1 < d; ++r)
      for (std::size_t cc = 0, k = 0; cc < d; ++cc) {
        if (cc == c) continue;
        minor(r, k++) = rows[r][cc];
      }
    Integer det = determinant(std::move(minor));
    normal[c] = (c % 2 == 0) ? det : Integer(-det);
  }
  return normal;
}

BoundaryFacet make_facet(const std::vector<IntVector>& points,
                         std::vector<std::size_t> vertices,
                         const IntVector& interior_sum,
                         const Integer& interior_weight) {
  std::sort(vertices.begin(), vertices.end());
  BoundaryFacet f{std::move(vertices), {}, {}};
  f.normal = hyperplane_normal(points, f.vertices);
  f.offset = dot(f.normal, points[f.vertices.front()]);
  // Orient so that the interior reference point lies strictly below.
  if (dot(f.normal, interior_sum) > interior_weight * f.offset) {
    for (auto& x : f.normal) x = -x;
    f.offset = -f.offset;
  }
  return f;
}

}  // namespace

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t affine_rank(const std::vector<IntVector>& points) {
  if (points.empty()) return 0;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(difference(points[i], points[0]));
  return rank(IntMatrix::from_rows(diffs, points[0].size()));
}

Integer simplex_volume(const std::vector<IntVector>& points,
                       const std::vector<std::size_t>& simplex) {
  const std::size_t d = points.front().size();
  IntMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      m(r, c) = points[simplex[r + 1]][c] - points[simplex[0]][c];
  return abs(determinant(std::move(m)));
}

Hull full_dimensional_hull(const std::vector<IntVector>& points) {
  if (points.empty()) throw Error(ErrorKind::NotFullDimensional, "no points");
  const std::size_t d = points.front().size();
  if (d == 0) throw Error(ErrorKind::NotFullDimensional, "zero-dimensional");

  // Initial simplex: greedily grow an affinely independent set.
  std::vector<std::size_t> simplex{0};
  std::vector<IntVector> diffs;
  std::vector<bool> used(points.size(), false);
  used[0] = true;
  for (std::size_t i = 1; i < points.size() && simplex.size() < d + 1; ++i) {
    diffs.push_back(difference(points[i], points[0]));
    if (rank(IntMatrix::from_rows(diffs, d)) == diffs.size()) {
      simplex.push_back(i);
      used[i] = true;
    } else {
      diffs.pop_back();
    }
  }
  if (simplex.size() != d + 1) {
    throw Error(ErrorKind::NotFullDimensional,
                "points span an affine space of dimension " +
                    std::to_string(simplex.size() - 1) + " in R^" +
                    std::to_string(d));
  }

  IntVector interior_sum(d, 0);
  for (auto i : simplex)
    for (std::size_t c = 0; c < d; ++c) interior_sum[c] += points[i][c];
  const Integer interior_weight = static_cast<long>(d + 1);

  Hull hull;
  hull.simplices.push_back(simplex);
  std::vector<BoundaryFacet> boundary;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    std::vector<std::size_t> vertices;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != skip) vertices.push_back(simplex[i]);
    boundary.push_back(make_facet(points, vertices, interior_sum, interior_weight));
  }

  for (std::size_t p = 0; p < points.size(); ++p) {
    if (used[p]) continue;
    std::vector<bool> visible(boundary.size(), false);
    bool any = false;
    for (std::size_t f = 0; f < boundary.size(); ++f) {
      if (dot(boundary[f].normal, points[p]) > boundary[f].offset) {
        visible[f] = true;
        any = true;
      }
    }
    if (!any) continue;  // inside or on the current hull

    // Horizon ridges occur in exactly one visible facet.
    std::map<std::vector<std::size_t>, int> ridge_count;
    for (std::size_t f = 0; f < boundary.size(); ++f) {
      if (!visible[f]) continue;
      const auto& vs = boundary[f].vertices;
      std::vector<std::size_t> cone(vs);
      cone.push_back(p);
      hull.simplices.push_back(std::move(cone));
      for (std::size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (i != drop) ridge.push_back(vs[i]);
        ++ridge_count[ridge];
      }
    }
    std::vector<BoundaryFacet> next;
    for (std::size_t f = 0; f < boundary.size(); ++f)
      if (!visible[f]) next.push_back(std::move(boundary[f]));
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<std::size_t> vertices(ridge);
      vertices.push_back(p);
      next.push_back(make_facet(points, vertices, interior_sum, interior_weight));
    }
    boundary = std::move(next);
  }

  // Merge coplanar boundary simplices into true facets.
  std::map<IntVector, std::size_t> by_plane;
  for (const auto& f : boundary) {
    Integer g = 0;
    for (const auto& x : f.normal) g = gcd(g, x);
    IntVector key(f.normal);
    for (auto& x : key) x /= g;
    key.push_back(f.offset / g);
    if (by_plane.count(key)) continue;
    by_plane.emplace(key, hull.facets.size());
    HullFacet facet;
    facet.offset = key.back();
    key.pop_back();
    facet.normal = std::move(key);
    for (std::size_t i = 0; i < points.size(); ++i)
      if (dot(facet.normal, points[i]) == facet.offset) facet.points.push_back(i);
    hull.facets.push_back(std::move(facet));
  }
  return hull;
}

}  // namespace sparseprime::detail
