#include "sparseprime/polytope.hpp"

#include <algorithm>
#include <string>

#include "sparseprime/detail/hull.hpp"
#include "sparseprime/error.hpp"

namespace sparseprime {

using detail::IntVector;

namespace {

IntVector widen(const LatticePoint& p, std::span<const std::size_t> coords) {
  IntVector out;
  out.reserve(coords.size());
  for (auto c : coords) out.emplace_back(static_cast<long>(p[c]));
  return out;
}

std::vector<std::size_t> all_coordinates(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

LatticePolytope convex_hull(std::span<const LatticePoint> input) {
  if (input.empty()) {
    throw Error(ErrorKind::EmptySupport, "convex hull of no points");
  }
  std::vector<LatticePoint> points(input.begin(), input.end());
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n)
      throw Error(ErrorKind::DimensionMismatch, "mixed point lengths");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope out;
  out.ambient_ = n;
  if (points.size() == 1) {
    out.vertices_ = points;
    return out;
  }

  // Project onto coordinates that are independent on the affine hull; the
  // projection is an affine isomorphism onto R^d, so it preserves vertices.
  std::vector<LatticePoint> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    LatticePoint d(n);
    for (std::size_t c = 0; c < n; ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  auto echelon = hermite_normal_form(IntMatrix::from_rows(diffs, n));
  const std::size_t d = echelon.rank;
  out.dim_ = d;

  std::vector<IntVector> projected;
  projected.reserve(points.size());
  for (const auto& p : points) projected.push_back(widen(p, echelon.pivot_columns));
  auto hull = detail::full_dimensional_hull(projected);

  std::vector<std::vector<std::size_t>> incident(points.size());
  for (std::size_t f = 0; f < hull.facets.size(); ++f)
    for (auto i : hull.facets[f].points) incident[i].push_back(f);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<IntVector> normals;
    for (auto f : incident[i]) normals.push_back(hull.facets[f].normal);
    if (normals.size() >= d && rank(IntMatrix::from_rows(normals, d)) == d)
      out.vertices_.push_back(points[i]);
  }
  return out;
}

std::int64_t normalized_volume(const LatticePolytope& polytope) {
  const std::size_t n = polytope.ambient_dimension();
  if (polytope.dim() != n) {
    throw Error(ErrorKind::NotFullDimensional,
                "polytope of dimension " + std::to_string(polytope.dim()) +
                    " in Z^" + std::to_string(n));
  }
  if (n == 0) return 1;
  std::vector<IntVector> pts;
  const auto coords = all_coordinates(n);
  for (const auto& v : polytope.vertices()) pts.push_back(widen(v, coords));
  auto hull = detail::full_dimensional_hull(pts);
  Integer total = 0;
  for (const auto& s : hull.simplices) total += detail::simplex_volume(pts, s);
  return to_int64(total);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dimension() != q.ambient_dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "Minkowski sum of polytopes in "
                                              "different ambient spaces");
  }
  std::vector<LatticePoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      LatticePoint s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  return convex_hull(sums);
}

MixedVolume mixed_volume(std::span<const LatticePolytope> polytopes) {
  const std::size_t m = polytopes.size();
  if (m == 0) return {1};
  for (const auto& p : polytopes) {
    if (p.ambient_dimension() != m) {
      throw Error(ErrorKind::DimensionMismatch,
                  "mixed volume of " + std::to_string(m) +
                      " polytopes needs them in Z^" + std::to_string(m) +
                      ", got Z^" + std::to_string(p.ambient_dimension()));
    }
  }
  if (m >= 31) throw Error(ErrorKind::TooLarge, "too many polytopes");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<LatticePolytope> sums(full + 1);
  Integer total = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::size_t index = static_cast<std::size_t>(__builtin_ctz(low));
    sums[mask] = (mask == low) ? polytopes[index]
                               : minkowski_sum(sums[mask ^ low], polytopes[index]);
    if (sums[mask].dim() < m) continue;
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    const long volume = normalized_volume(sums[mask]);
    if ((m - size) % 2 == 0)
      total += volume;
    else
      total -= volume;
  }
  // The alternating sum of normalized volumes is m! times the mixed volume.
  Integer factorial = 1;
  for (std::size_t i = 2; i <= m; ++i) factorial *= static_cast<long>(i);
  if (sgn(total % factorial) != 0 || sgn(total) < 0) {
    throw Error(ErrorKind::PreconditionFailed,
                "inclusion-exclusion produced " + total.get_str() +
                    ", not a nonnegative multiple of " + std::to_string(m) + "!");
  }
  return {to_int64(total / factorial)};
}

MixedVolume restricted_mixed_volume(const SupportSystem& system,
                                    const SubsetWitness& subset) {
  const auto points = union_points(system, mask_of(subset));
  const auto basis = saturated_lattice_basis(points);
  return restricted_mixed_volume(system, subset, basis);
}

MixedVolume restricted_mixed_volume(const SupportSystem& system,
                                    const SubsetWitness& subset,
                                    std::span<const LatticePoint> basis) {
  if (subset.empty()) return {1};
  const auto points = union_points(system, mask_of(subset));
  const std::size_t r = rank(points);
  if (r != subset.size()) {
    throw Error(ErrorKind::RankMismatch,
                "span of the chosen supports has rank " + std::to_string(r) +
                    ", expected " + std::to_string(subset.size()));
  }
  if (basis.size() != r) {
    throw Error(ErrorKind::RankMismatch, "basis size differs from the rank");
  }
  std::vector<LatticePolytope> hulls;
  for (auto j : subset.indices) {
    std::vector<LatticePoint> coords;
    for (const auto& p : system[j].points()) {
      auto c = coordinates_in_lattice(p, basis);
      coords.emplace_back(c.begin(), c.end());
    }
    hulls.push_back(convex_hull(coords));
  }
  return mixed_volume(hulls);
}

}  // namespace sparseprime
