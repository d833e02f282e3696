#include "sparseprime/tropical.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "sparseprime/decider.hpp"
#include "sparseprime/detail/hull.hpp"
#include "sparseprime/error.hpp"
#include "sparseprime/transversal.hpp"

namespace sparseprime {

namespace {

using detail::IntVector;

struct LiftedFacet {
  IntVector inner_normal;  // last coordinate > 0 on lower facets
  std::vector<std::size_t> points;
};

std::size_t span_dim(const std::vector<LatticePoint>& diffs) {
  if (diffs.empty()) return 0;
  return rank(std::span<const LatticePoint>(diffs));
}

void append_differences(const Support& support,
                        const std::vector<std::size_t>& piece,
                        std::vector<LatticePoint>& out) {
  const LatticePoint& base = support[piece.front()];
  for (std::size_t i = 1; i < piece.size(); ++i) {
    LatticePoint d(base.size());
    for (std::size_t c = 0; c < base.size(); ++c)
      d[c] = support[piece[i]][c] - base[c];
    out.push_back(std::move(d));
  }
}

std::size_t pieces_dim(const SupportSystem& system, const MixedCell& cell,
                       SubsetMask mask) {
  std::vector<LatticePoint> diffs;
  for (std::size_t j = 0; j < system.size(); ++j)
    if (mask & (SubsetMask{1} << j))
      append_differences(system[j], cell.pieces[j], diffs);
  return span_dim(diffs);
}

// Lower faces of the hull of `points` in R^(r+1), each with the facets
// containing it.
std::vector<LiftedFacet> lifted_facets(const std::vector<IntVector>& points,
                                       std::size_t r) {
  std::vector<LiftedFacet> out;
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  if (detail::affine_rank(points) == r + 1) {
    for (auto& f : detail::full_dimensional_hull(points).facets) {
      IntVector inner = f.normal;
      for (auto& x : inner) x = -x;
      out.push_back({std::move(inner), f.points});
    }
    return out;
  }
  // The lift is affine on the whole sum: one lower face, and the vertical
  // facets over the boundary of the base polytope.
  std::vector<std::vector<Integer>> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Integer> d(r + 1);
    for (std::size_t c = 0; c <= r; ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  auto kernel = integer_kernel(IntMatrix::from_rows(diffs, r + 1));
  IntVector normal(kernel.front().begin(), kernel.front().end());
  if (sgn(normal.back()) < 0)
    for (auto& x : normal) x = -x;
  out.push_back({std::move(normal), all});

  std::vector<IntVector> base;
  for (const auto& p : points) base.emplace_back(p.begin(), p.end() - 1);
  if (points.size() > 1) {
    for (auto& f : detail::full_dimensional_hull(base).facets) {
      IntVector inner(r + 1, 0);
      for (std::size_t c = 0; c < r; ++c) inner[c] = -f.normal[c];
      out.push_back({std::move(inner), f.points});
    }
  }
  return out;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

void validate(const TropicalData& data) {
  if (data.lifts.size() != data.system.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected lifts for " + std::to_string(data.system.size()) +
                    " supports, got " + std::to_string(data.lifts.size()));
  }
  for (std::size_t j = 0; j < data.system.size(); ++j)
    if (data.lifts[j].size() != data.system[j].size())
      throw Error(ErrorKind::DimensionMismatch,
                  "lifts of support " + std::to_string(j + 1) +
                      " do not match its points");
}

std::vector<MixedCell> mixed_subdivision(const TropicalData& data) {
  validate(data);
  // Translation keeps the sorted order, so piece indices refer to the input.
  const SupportSystem system = normalize(data.system);
  const std::size_t n = system.dimension();
  const std::size_t k = system.size();

  const auto all = union_points(system, k >= 32 ? ~SubsetMask{0}
                                                : (SubsetMask{1} << k) - 1);
  const auto basis = saturated_lattice_basis(all);
  const std::size_t r = basis.size();
  IntMatrix basis_rows = IntMatrix::from_rows(basis, n);

  Integer denom = 1;
  for (const auto& row : data.lifts)
    for (const auto& w : row) denom = lcm(denom, Integer(w.get_den()));

  std::vector<std::vector<std::vector<std::int64_t>>> coords(k);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& p : system[j].points())
      coords[j].push_back(coordinates_in_lattice(p, basis));

  auto make_cell = [&](const std::vector<Rational>& c_red) {
    MixedCell cell;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Rational> values;
      for (std::size_t i = 0; i < system[j].size(); ++i) {
        Rational v = data.lifts[j][i];
        for (std::size_t c = 0; c < r; ++c) v += c_red[c] * coords[j][i][c];
        values.push_back(v);
      }
      const Rational best = *std::min_element(values.begin(), values.end());
      std::vector<std::size_t> piece;
      for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == best) piece.push_back(i);
      std::vector<LatticePoint> diffs;
      append_differences(system[j], piece, diffs);
      cell.piece_dims.push_back(span_dim(diffs));
      cell.pieces.push_back(std::move(piece));
    }
    cell.total_dim = k == 0 ? 0 : pieces_dim(system, cell,
                                             (SubsetMask{1} << k) - 1);
    cell.dual_dim = n - cell.total_dim;
    if (r == 0) {
      cell.functional.assign(n, Rational(0));
    } else {
      auto solved = solve_rational(basis_rows, c_red);
      cell.functional = std::move(*solved);
    }
    return cell;
  };

  std::vector<MixedCell> cells;
  if (r == 0) {
    cells.push_back(make_cell({}));
    return cells;
  }

  // Lifted Minkowski sum; for repeated sums only the lowest lift matters.
  std::map<IntVector, Integer> lowest;
  std::vector<std::size_t> at(k, 0);
  while (true) {
    IntVector y(r, 0);
    Integer h = 0;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < r; ++c)
        y[c] += static_cast<long>(coords[j][at[j]][c]);
      const Rational scaled = data.lifts[j][at[j]] * denom;
      h += scaled.get_num();
    }
    auto [it, inserted] = lowest.emplace(std::move(y), h);
    if (!inserted && h < it->second) it->second = h;
    std::size_t j = 0;
    while (j < k && ++at[j] == system[j].size()) at[j++] = 0;
    if (j == k) break;
  }
  std::vector<IntVector> lifted;
  for (const auto& [y, h] : lowest) {
    IntVector p = y;
    p.push_back(h);
    lifted.push_back(std::move(p));
  }

  const auto facets = lifted_facets(lifted, r);
  std::set<std::vector<std::size_t>> faces;
  std::deque<std::vector<std::size_t>> work;
  for (const auto& f : facets)
    if (faces.insert(f.points).second) work.push_back(f.points);
  while (!work.empty()) {
    auto face = std::move(work.front());
    work.pop_front();
    for (const auto& f : facets) {
      auto meet = intersect(face, f.points);
      if (!meet.empty() && faces.insert(meet).second)
        work.push_back(std::move(meet));
    }
  }

  for (const auto& face : faces) {
    std::vector<const LiftedFacet*> containing;
    bool lower = false;
    Integer upper_weight = 0;
    for (const auto& f : facets)
      if (std::includes(f.points.begin(), f.points.end(), face.begin(),
                        face.end())) {
        containing.push_back(&f);
        const int s = sgn(f.inner_normal.back());
        if (s > 0) lower = true;
        if (s < 0) upper_weight -= f.inner_normal.back();
      }
    if (!lower) continue;
    // A strictly positive combination of the containing facets' normals
    // selects exactly this face; weighting the lower ones keeps it lower.
    const Integer w = upper_weight + 1;
    IntVector normal(r + 1, 0);
    for (const auto* f : containing) {
      const Integer weight = sgn(f->inner_normal.back()) > 0 ? w : Integer(1);
      for (std::size_t c = 0; c <= r; ++c)
        normal[c] += weight * f->inner_normal[c];
    }
    std::vector<Rational> c_red(r);
    for (std::size_t c = 0; c < r; ++c) {
      c_red[c] = Rational(normal[c], normal[r] * denom);
      c_red[c].canonicalize();
    }
    cells.push_back(make_cell(c_red));
  }

  std::sort(cells.begin(), cells.end(), [](const MixedCell& a, const MixedCell& b) {
    if (a.total_dim != b.total_dim) return a.total_dim < b.total_dim;
    return a.pieces < b.pieces;
  });
  return cells;
}

StableIntersectionComplex stable_intersection(const TropicalData& data) {
  validate(data);
  StableIntersectionComplex out;
  const SupportSystem system = normalize(data.system);
  if (!has_independent_transversal(system)) return out;
  const std::size_t k = system.size();

  auto stable = [&](const MixedCell& cell) {
    for (SubsetMask mask = 1; mask < (SubsetMask{1} << k); ++mask)
      if (pieces_dim(system, cell, mask) <
          static_cast<std::size_t>(std::popcount(mask)))
        return false;
    return true;
  };
  for (auto& cell : mixed_subdivision(data)) {
    if (cell.total_dim != k && cell.total_dim != k + 1) continue;
    if (!stable(cell)) continue;
    (cell.total_dim == k ? out.facets : out.ridges).push_back(std::move(cell));
  }

  for (std::size_t f = 0; f < out.facets.size(); ++f)
    for (std::size_t g = 0; g < out.ridges.size(); ++g) {
      bool face = true;
      for (std::size_t j = 0; j < k && face; ++j) {
        const auto& small = out.facets[f].pieces[j];
        const auto& big = out.ridges[g].pieces[j];
        face = std::includes(big.begin(), big.end(), small.begin(), small.end());
      }
      if (face) out.incidence.emplace_back(f, g);
    }
  return out;
}

bool connected_through_codim_one(const StableIntersectionComplex& complex) {
  const std::size_t m = complex.facets.size();
  if (m <= 1) return true;
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::size_t, std::size_t> first_facet_of_ridge;
  std::size_t components = m;
  for (auto [f, g] : complex.incidence) {
    auto [it, inserted] = first_facet_of_ridge.emplace(g, f);
    if (inserted) continue;
    const auto a = find(it->second), b = find(f);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

CorollaryReport corollary_check(const TropicalData& data, std::size_t bound) {
  validate(data);
  CorollaryReport report;
  DecideOptions options;
  options.enumeration_bound = bound;
  report.condition_holds =
      decide(normalize(data.system), options).kind == VerdictKind::GenericallyPrime;
  report.ctc1 = connected_through_codim_one(stable_intersection(data));
  report.consistent = !report.condition_holds || report.ctc1;
  return report;
}

Lifts random_lifts(const SupportSystem& system, std::uint64_t seed,
                   std::int64_t range, std::int64_t denominator) {
  if (range < 0 || denominator < 1) {
    throw Error(ErrorKind::PreconditionFailed,
                "lift range must be >= 0 and denominator >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(-range * denominator,
                                                   range * denominator);
  Lifts lifts;
  for (const Support& s : system.supports()) {
    std::vector<Rational> row;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Rational w(static_cast<long>(draw(rng)), static_cast<long>(denominator));
      w.canonicalize();
      row.push_back(w);
    }
    lifts.push_back(std::move(row));
  }
  return lifts;
}

}  // namespace sparseprime
