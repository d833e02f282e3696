#include <doctest.h>

#include "sparseprime/detail/finite_field.hpp"
#include "sparseprime/error.hpp"
#include "sparseprime/ff_oracle.hpp"
#include "sparseprime/polytope.hpp"
#include "test_support.hpp"

using namespace sparseprime;
using namespace testing_support;

namespace {

CoefficientAssignment coeffs(std::vector<std::vector<std::uint64_t>> v) {
  return CoefficientAssignment{std::move(v), 0};
}

SupportSystem ex3() {
  return normalize(make_system(2, {{zero(2), unit(2, 0), unit(2, 1)},
                                   {unit(2, 0), unit(2, 1), {1, 1}}}));
}

std::int64_t mixed_volume_of(const SupportSystem& s) {
  std::vector<LatticePolytope> ps;
  for (const auto& sup : s.supports()) ps.push_back(convex_hull(sup.points()));
  return mixed_volume(ps).value;
}

}  // namespace

TEST_CASE("field arithmetic helpers") {
  ff::PrimeField f(7);
  CHECK(f.mul(f.inv(3), 3) == 1);
  using P = ff::Poly<ff::PrimeField>;
  // (x-1)^2 (x-2) has two distinct roots.
  P a = ff::mul(f, ff::mul(f, P{6, 1}, P{6, 1}), P{5, 1});
  CHECK(ff::radical_degree(f, a) == 2);
  // x^7 - x splits into 7 distinct linear factors over F_7.
  P frob(8, 0);
  frob[7] = 1;
  frob[1] = 6;
  std::mt19937_64 rng(1);
  CHECK(ff::irreducible_factors(f, frob, rng).size() == 7);
  // x^2 + 1 is irreducible over F_7; x^7 has one root, of multiplicity 7.
  CHECK(ff::irreducible_factors(f, P{1, 0, 1}, rng).size() == 1);
  P x7(8, 0);
  x7[7] = 1;
  CHECK(ff::radical_degree(f, x7) == 1);
  ff::ExtensionField k(f, P{1, 0, 1});
  auto i = k.reduce(P{0, 1});
  CHECK(k.mul(i, i) == k.from_int(-1));
  CHECK(k.mul(k.inv(i), i) == k.one());
  CHECK(k.pth_root(k.pow(i, 7)) == i);
}

TEST_CASE("rational root counts") {
  FieldSpec f7{7};
  // x - 3 over F_7.
  CHECK(rational_root_count(make_system(1, {{{0}, {1}}}), coeffs({{4, 1}}), f7) == 1);
  CHECK(rational_root_count(make_system(1, {{{0}}}), coeffs({{5}}), f7) == 0);

  std::vector<LatticePoint> line{zero(2), unit(2, 0), unit(2, 1)};
  auto ex2 = make_system(2, {line, line, line});
  int zeros = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto c = random_coefficients(ex2, FieldSpec{101}, seed);
    if (rational_root_count(ex2, c, FieldSpec{101}) == 0) ++zeros;
  }
  CHECK(zeros >= 38);
  CHECK_THROWS_AS(rational_root_count(ex2, random_coefficients(ex2, FieldSpec{101}, 0),
                                      FieldSpec{101}, 1000),
                  Error);
}

TEST_CASE("exact torus counts in two variables") {
  FieldSpec f7{7};
  // x + y - 2 and x - y; points sorted as (0,0), (0,1), (1,0).
  auto lines = make_system(2, {{zero(2), unit(2, 0), unit(2, 1)}, {unit(2, 0), unit(2, 1)}});
  CHECK(exact_torus_count_2d(lines, coeffs({{5, 1, 1}, {6, 1}}), f7) == 1);

  // x^2 - 1 and y - x over F_11.
  auto squares = make_system(2, {{zero(2), {2, 0}}, {unit(2, 1), unit(2, 0)}});
  CHECK(exact_torus_count_2d(squares, coeffs({{10, 1}, {1, 10}}), FieldSpec{11}) == 2);

  int twos = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto c = random_coefficients(ex3(), FieldSpec{10007}, seed);
    if (exact_torus_count_2d(ex3(), c, FieldSpec{10007}) == 2) ++twos;
  }
  CHECK(twos >= 38);

  // A shared factor: (x - 1) and (x - 1) y.
  auto shared = make_system(2, {{zero(2), unit(2, 0)}, {unit(2, 1), {1, 1}}});
  CHECK_THROWS_AS(exact_torus_count_2d(shared, coeffs({{6, 1}, {6, 1}}), f7), Error);
  CHECK_THROWS_AS(exact_torus_count_2d(make_system(1, {{{0}, {1}}}), coeffs({{1, 1}}), f7),
                  Error);
}

TEST_CASE("BKK experiments") {
  auto r = bkk_experiment(ex3(), FieldSpec{10007}, 20, 3, CountMode::Exact2d);
  CHECK(r.counts.size() == 20);
  CHECK(r.mode == 2);
  auto lines = make_system(2, {{zero(2), unit(2, 0)}, {zero(2), unit(2, 1)}});
  auto l = bkk_experiment(lines, FieldSpec{10007}, 20, 5, CountMode::Exact2d);
  CHECK(l.histogram.size() == 1);
  CHECK(l.mode == 1);
  auto seg = make_system(2, {{zero(2), {2, 0}}, {zero(2), unit(2, 1)}});
  CHECK(bkk_experiment(seg, FieldSpec{10007}, 20, 7, CountMode::Exact2d).mode == 2);
}

TEST_CASE("determinism across seeds and thread counts") {
  auto a = bkk_experiment(ex3(), FieldSpec{10007}, 12, 9, CountMode::Exact2d, 1);
  auto b = bkk_experiment(ex3(), FieldSpec{10007}, 12, 9, CountMode::Exact2d, 4);
  CHECK(a.counts == b.counts);
  auto c = bkk_experiment(ex3(), FieldSpec{101}, 12, 9, CountMode::Rational, 3);
  auto d = bkk_experiment(ex3(), FieldSpec{101}, 12, 9, CountMode::Rational, 1);
  CHECK(c.counts == d.counts);
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(validate(FieldSpec{9}), Error);
  CHECK_THROWS_AS(validate(FieldSpec{2}), Error);
  CHECK_NOTHROW(validate(FieldSpec{10007}));
}

TEST_CASE("property: Bernstein bound and rational points") {
  Gen gen(71);
  for (int trial = 0; trial < 60; ++trial) {
    auto s = normalize(gen.system(2, 2, 3, 0, 3));
    const auto bound = mixed_volume_of(s);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto c = random_coefficients(s, FieldSpec{31}, seed + 100 * trial);
      std::int64_t exact = 0;
      try {
        exact = exact_torus_count_2d(s, c, FieldSpec{31});
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CommonFactor);
        continue;
      }
      CHECK(exact <= bound);
      CHECK(rational_root_count(s, c, FieldSpec{31}) <= exact);
    }
  }
}
