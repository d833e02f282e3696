#include <doctest.h>

#include "sparseprime/error.hpp"
#include "sparseprime/linalg.hpp"
#include "test_support.hpp"

using namespace sparseprime;
using namespace testing_support;

namespace {

std::size_t rank_of(std::vector<LatticePoint> v) {
  return rank(std::span<const LatticePoint>(v));
}

LatticePoint combine(const std::vector<std::int64_t>& c,
                     const std::vector<LatticePoint>& basis, std::size_t n) {
  LatticePoint p(n, 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t t = 0; t < n; ++t) p[t] += c[i] * basis[i][t];
  return p;
}

}  // namespace

TEST_CASE("rank of small vector sets") {
  CHECK(rank_of({unit(3, 0), unit(3, 1)}) == 2);
  CHECK(rank_of({}) == 0);
  CHECK(rank_of({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}}) == 2);
  CHECK(rank_of({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("determinant and Hermite form") {
  IntMatrix a = IntMatrix::from_rows(std::vector<LatticePoint>{{2, 1}, {4, 5}}, 2);
  CHECK(determinant(a) == 6);
  auto h = hermite_normal_form(a);
  CHECK(h.rank == 2);
  CHECK(h.transform * a == h.form);
  CHECK(abs(determinant(h.transform)) == 1);
  CHECK(h.form(1, 0) == 0);
}

TEST_CASE("saturated lattice basis") {
  auto b1 = saturated_lattice_basis(std::vector<LatticePoint>{{2, 0}, {0, 3}});
  CHECK(b1.size() == 2);
  CHECK(abs(determinant(IntMatrix::from_rows(b1, 2))) == 1);

  std::vector<LatticePoint> v{{1, 0, 1, 0}, {0, 1, 0, 1}};
  auto b2 = saturated_lattice_basis(v);
  REQUIRE(b2.size() == 2);
  CHECK(quotient_torsion_free(b2, 4));
  for (const auto& p : v) CHECK_NOTHROW(coordinates_in_lattice(p, b2));

  auto b3 = saturated_lattice_basis(std::vector<LatticePoint>{{2}});
  REQUIRE(b3.size() == 1);
  CHECK(b3[0] == LatticePoint{1});
}

TEST_CASE("coordinates in a lattice") {
  std::vector<LatticePoint> basis{{1, 0, 1, 0}, {0, 1, 0, 1}};
  CHECK(coordinates_in_lattice({1, 0, 1, 0}, basis) == std::vector<std::int64_t>{1, 0});
  CHECK(coordinates_in_lattice({1, 1, 1, 1}, basis) == std::vector<std::int64_t>{1, 1});
  try {
    coordinates_in_lattice({1, 0, 0, 0}, basis);
    FAIL("expected NotInLattice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInLattice);
  }
}

TEST_CASE("projection along a vector") {
  auto e3 = projection_along({0, 0, 1});
  CHECK(e3.matrix.rows() == 2);
  CHECK(e3({0, 0, 5}) == LatticePoint{0, 0});
  CHECK(rank(e3.matrix) == 2);

  auto diag = projection_along({1, 1});
  CHECK(diag({1, 1}) == LatticePoint{0});
  CHECK(rank(diag.matrix) == 1);

  try {
    projection_along({0, 0});
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroVector);
  }
}

TEST_CASE("quotient coordinates") {
  auto q1 = quotient_coordinates(std::vector<LatticePoint>{unit(2, 0), unit(2, 1)},
                                 std::vector<LatticePoint>{unit(2, 0)}, 2);
  REQUIRE(q1.size() == 2);
  CHECK(q1[0] == LatticePoint{0});
  CHECK((q1[1] == LatticePoint{1} || q1[1] == LatticePoint{-1}));

  auto q2 = quotient_coordinates(std::vector<LatticePoint>{{1, 1}},
                                 std::vector<LatticePoint>{{1, 1}}, 2);
  CHECK(q2[0] == LatticePoint{0});

  auto q3 = quotient_coordinates(std::vector<LatticePoint>{{0, 1, 0}},
                                 std::vector<LatticePoint>{{1, 0, 1}}, 3);
  REQUIRE(q3[0].size() == 2);
  // Primitive: the single Smith invariant is 1.
  CHECK(quotient_torsion_free(q3, 2));
}

TEST_CASE("solve_rational") {
  IntMatrix a = IntMatrix::from_rows(std::vector<LatticePoint>{{1, 1}, {1, -1}}, 2);
  std::vector<Rational> b{Rational(3), Rational(1)};
  auto x = solve_rational(a, b);
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  IntMatrix s = IntMatrix::from_rows(std::vector<LatticePoint>{{1, 1}, {2, 2}}, 2);
  CHECK_FALSE(solve_rational(s, std::vector<Rational>{Rational(1), Rational(3)}));
}

TEST_CASE("property: rank invariants and agreement with rational elimination") {
  Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen.index(1, 5);
    auto v = gen.points(n, gen.index(0, 6), -3, 3);
    const std::size_t r = rank_of(v);
    CHECK(r == rational_rank(v));
    auto w = v;
    std::shuffle(w.begin(), w.end(), gen.engine());
    CHECK(rank_of(w) == r);
    if (!w.empty()) {
      for (auto& x : w[0]) x = -x;
      CHECK(rank_of(w) == r);
    }
    if (w.size() >= 2) {
      for (std::size_t t = 0; t < n; ++t) w[0][t] += w[1][t];
      CHECK(rank_of(w) == r);
    }
  }
}

TEST_CASE("property: saturated bases and lattice coordinates") {
  Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen.index(1, 5);
    auto v = gen.points(n, gen.index(1, 5), -3, 3);
    auto basis = saturated_lattice_basis(v);
    CHECK(basis.size() == rank_of(v));
    if (basis.empty()) continue;
    CHECK(quotient_torsion_free(basis, n));
    for (const auto& p : v)
      CHECK(combine(coordinates_in_lattice(p, basis), basis, n) == p);
  }
}

TEST_CASE("property: projection drops the rank by exactly the line") {
  Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen.index(1, 5);
    auto u = gen.point(n, -3, 3);
    if (std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) continue;
    auto phi = projection_along(u);
    CHECK(phi(u) == zero(n - 1));
    auto v = gen.points(n, gen.index(0, 5), -3, 3);
    std::vector<LatticePoint> image;
    for (const auto& p : v) image.push_back(phi(p));
    auto with_u = v;
    with_u.push_back(u);
    CHECK(rank_of(image) == rank_of(with_u) - 1);
    // Surjective: the Smith invariants of the map are all 1.
    CHECK(quotient_torsion_free(phi.matrix.row_points(), n));
  }
}

TEST_CASE("property: span rank is submodular") {
  Gen gen(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.index(2, 5);
    auto s = gen.system(n, gen.index(2, 4), 3, -2, 2);
    for_each_nonempty_subset(s.size(), [&](const std::vector<std::size_t>& a) {
      for_each_nonempty_subset(s.size(), [&](const std::vector<std::size_t>& b) {
        std::vector<std::size_t> uni, inter;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(inter));
        CHECK(rational_rank(union_of(s, uni)) + rational_rank(union_of(s, inter)) <=
              rational_rank(union_of(s, a)) + rational_rank(union_of(s, b)));
      });
    });
  }
}

TEST_CASE("values beyond 64 bits are rejected on conversion") {
  Integer big = Integer(1) << 70;
  try {
    to_int64(big);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}
