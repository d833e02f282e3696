#include <doctest.h>

#include <map>

#include "sparseprime/decider.hpp"
#include "sparseprime/polytope.hpp"
#include "sparseprime/transversal.hpp"
#include "sparseprime/tropical.hpp"
#include "test_support.hpp"

using namespace sparseprime;
using namespace testing_support;

namespace {

Lifts zero_lifts(const SupportSystem& s) {
  Lifts out;
  for (const auto& sup : s.supports()) out.emplace_back(sup.size(), Rational(0));
  return out;
}

Lifts int_lifts(std::vector<std::vector<long>> v) {
  Lifts out;
  for (const auto& row : v) {
    std::vector<Rational> r;
    for (auto x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

SupportSystem ex3() {
  return normalize(make_system(2, {{zero(2), unit(2, 0), unit(2, 1)},
                                   {unit(2, 0), unit(2, 1), {1, 1}}}));
}

SupportSystem simplices(std::size_t n, std::size_t k) {
  std::vector<LatticePoint> s{zero(n)};
  for (std::size_t i = 0; i < n; ++i) s.push_back(unit(n, i));
  return make_system(n, std::vector<std::vector<LatticePoint>>(k, s));
}

std::vector<LatticePoint> piece_points(const SupportSystem& s, const MixedCell& c,
                                       std::size_t j) {
  std::vector<LatticePoint> out;
  for (auto i : c.pieces[j]) out.push_back(s[j][i]);
  return out;
}

// Independent re-check of one cell against its functional.
void check_cell(const TropicalData& d, const MixedCell& c) {
  const auto& s = d.system;
  CHECK(c.dual_dim == s.dimension() - c.total_dim);
  std::size_t dims = 0;
  std::vector<LatticePoint> diffs;
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < s[j].size(); ++i) {
      Rational v = d.lifts[j][i];
      for (std::size_t t = 0; t < s.dimension(); ++t) v += c.functional[t] * s[j][i][t];
      values.push_back(v);
    }
    const auto best = *std::min_element(values.begin(), values.end());
    std::vector<std::size_t> argmin;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == best) argmin.push_back(i);
    CHECK(argmin == c.pieces[j]);
    auto pts = piece_points(s, c, j);
    std::vector<LatticePoint> own;
    for (const auto& p : pts) {
      LatticePoint q(p.size());
      for (std::size_t t = 0; t < p.size(); ++t) q[t] = p[t] - pts[0][t];
      own.push_back(q);
    }
    CHECK(c.piece_dims[j] == rational_rank(own));
    diffs.insert(diffs.end(), own.begin(), own.end());
    dims += c.piece_dims[j];
  }
  CHECK(c.total_dim == rational_rank(diffs));
  CHECK(c.total_dim <= dims);
}

std::int64_t cell_multiplicity_sum(const TropicalData& d) {
  std::int64_t sum = 0;
  for (const auto& c : stable_intersection(d).facets) {
    std::vector<LatticePolytope> ps;
    for (std::size_t j = 0; j < d.system.size(); ++j)
      ps.push_back(convex_hull(piece_points(d.system, c, j)));
    sum += mixed_volume(ps).value;
  }
  return sum;
}

}  // namespace

TEST_CASE("mixed subdivisions") {
  auto seg = make_system(1, {{{0}, {1}}});
  auto cells = mixed_subdivision({seg, zero_lifts(seg)});
  // The segment and its two endpoints.
  REQUIRE(cells.size() == 3);
  CHECK(cells.back().pieces[0] == std::vector<std::size_t>{0, 1});
  CHECK(cells.back().total_dim == 1);

  auto three = make_system(1, {{{0}, {1}, {2}}});
  auto cells3 = mixed_subdivision({three, int_lifts({{0, 0, 1}})});
  std::vector<std::vector<std::size_t>> top;
  for (const auto& c : cells3)
    if (c.total_dim == 1) top.push_back(c.pieces[0]);
  CHECK(top == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
  CHECK(cells3.size() == 5);

  auto square = make_system(2, {{zero(2), unit(2, 0)}, {zero(2), unit(2, 1)}});
  auto sq = mixed_subdivision({square, zero_lifts(square)});
  const auto& big = sq.back();
  CHECK(big.total_dim == 2);
  CHECK(big.piece_dims == std::vector<std::size_t>{1, 1});
  std::size_t full = 0;
  for (const auto& c : sq) full += c.total_dim == 2;
  CHECK(full == 1);
}

TEST_CASE("stable intersections") {
  auto line = make_system(2, {{zero(2), unit(2, 0), unit(2, 1)}});
  auto tl = stable_intersection({line, zero_lifts(line)});
  CHECK(tl.facets.size() == 3);
  CHECK(tl.ridges.size() == 1);
  CHECK(tl.incidence.size() == 3);
  CHECK(connected_through_codim_one(tl));

  auto planes = simplices(3, 2);
  TropicalData d{planes, int_lifts({{0, 3, -1, 2}, {1, -2, 4, 0}})};
  auto tp = stable_intersection(d);
  CHECK(tp.facets.size() >= 5);
  for (const auto& f : tp.facets) CHECK(f.dual_dim == 1);
  for (const auto& r : tp.ridges) CHECK(r.dual_dim == 0);
  CHECK(connected_through_codim_one(tp));

  auto t3 = stable_intersection({ex3(), int_lifts({{0, 1, 3}, {0, 2, -1}})});
  CHECK(t3.facets.size() == 2);
  CHECK(t3.ridges.empty());
  CHECK_FALSE(connected_through_codim_one(t3));

  auto unit_ideal = simplices(2, 3);
  CHECK(stable_intersection({unit_ideal, zero_lifts(unit_ideal)}).facets.empty());
}

TEST_CASE("connectivity edge cases") {
  StableIntersectionComplex empty;
  CHECK(connected_through_codim_one(empty));
  StableIntersectionComplex single;
  single.facets.resize(1);
  CHECK(connected_through_codim_one(single));
  StableIntersectionComplex two;
  two.facets.resize(2);
  CHECK_FALSE(connected_through_codim_one(two));
}

TEST_CASE("connectivity reports against the prime verdict") {
  auto s = simplices(3, 2);
  auto r = corollary_check({s, random_lifts(s, 4)});
  CHECK(r.condition_holds);
  CHECK(r.ctc1);
  CHECK(r.consistent);

  auto e = corollary_check({ex3(), int_lifts({{0, 1, 3}, {0, 2, -1}})});
  CHECK_FALSE(e.condition_holds);
  CHECK_FALSE(e.ctc1);
  CHECK(e.consistent);

  Gen gen(81);
  for (int trial = 0; trial < 20; ++trial) {
    auto one = gen.system(gen.index(2, 3), 1, 5, -2, 2);
    auto lifts = random_lifts(one, trial, 3);
    auto c = corollary_check({one, lifts});
    if (rational_rank(one[0].points()) >= 2) CHECK(c.condition_holds);
    CHECK(c.ctc1);
  }
}

TEST_CASE("lift validation") {
  auto s = simplices(2, 1);
  CHECK_THROWS(mixed_subdivision({s, int_lifts({{0, 0}})}));
}

TEST_CASE("property: every cell is selected by its functional") {
  Gen gen(82);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gen.index(1, 3);
    auto s = gen.system(n, gen.index(1, std::min<std::size_t>(n, 2)), 4, -2, 2);
    TropicalData d{s, random_lifts(s, trial, gen.coin() ? 1 : 5, gen.index(1, 3))};
    for (const auto& c : mixed_subdivision(d)) check_cell(d, c);
    auto complex = stable_intersection(d);
    for (std::size_t g = 0; g < complex.ridges.size(); ++g) {
      bool incident = false;
      for (auto [f, r] : complex.incidence) incident |= r == g;
      CHECK(incident);
    }
  }
}

TEST_CASE("property: mixed cells recover the mixed volume") {
  Gen gen(83);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = gen.index(1, 3);
    auto s = normalize(gen.system(n, n, 4, 0, 3));
    TropicalData d{s, random_lifts(s, 1000 + trial, 50, 7)};
    std::vector<LatticePolytope> ps;
    for (const auto& sup : s.supports()) ps.push_back(convex_hull(sup.points()));
    CHECK(cell_multiplicity_sum(d) == mixed_volume(ps).value);
  }
}

TEST_CASE("property: stable intersections of prime systems are connected") {
  Gen gen(84);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 50; ++trial) {
    const std::size_t n = gen.index(2, 3);
    auto s = gen.system(n, gen.index(1, 2), 4, -2, 2);
    if (decide(s).kind != VerdictKind::GenericallyPrime) continue;
    ++checked;
    const bool tied = trial % 4 == 0;
    TropicalData d{s, random_lifts(s, trial, tied ? 1 : 20, tied ? 1 : 3)};
    auto complex = stable_intersection(d);
    CHECK(connected_through_codim_one(complex));
    // Purity: every stable cell lies in the closure of a facet.
    for (const auto& c : complex.facets) CHECK(c.dual_dim == n - s.size());
  }
  CHECK(checked >= 30);
}
