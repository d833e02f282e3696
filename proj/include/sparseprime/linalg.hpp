#pragma once

// Exact integer and rational linear algebra over Z^n.
//
// Everything here works on arbitrary-precision integers (GMP). Lattice points
// themselves are stored as 64-bit exponent vectors; intermediate values are
// promoted to mpz and converted back with an overflow check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace sparseprime {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vector of a Laurent monomial.
using LatticePoint = std::vector<std::int64_t>;

std::int64_t to_int64(const Integer& value);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  // Rows are the given points; `cols` is needed to shape an empty list.
  static IntMatrix from_rows(std::span<const LatticePoint> rows,
                             std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  LatticePoint row(std::size_t r) const;
  std::vector<LatticePoint> row_points() const;
  IntMatrix transpose() const;
  IntMatrix take_rows(std::size_t first, std::size_t count) const;
  void swap_rows(std::size_t a, std::size_t b);

  LatticePoint apply(const LatticePoint& v) const;
  IntMatrix operator*(const IntMatrix& rhs) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Row-style Hermite normal form: transform * input == form, transform is
// unimodular, the nonzero rows of `form` are echelon with positive pivots and
// the entries above each pivot reduced into [0, pivot). Transposing gives the
// column-style lower-triangular convention.
struct HermiteDecomposition {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

HermiteDecomposition hermite_normal_form(IntMatrix a);

// Diagonal of the Smith normal form (d_1 | d_2 | ...), nonzero entries only.
std::vector<Integer> smith_invariants(IntMatrix a);

// Fraction-free (Bareiss) rank.
std::size_t rank(const IntMatrix& a);
std::size_t rank(std::span<const LatticePoint> vectors);

Integer determinant(IntMatrix a);

// Z-basis of {x in Z^n : a x = 0}, canonicalized to Hermite form.
std::vector<LatticePoint> integer_kernel(const IntMatrix& a);

// Basis of span_Q(vectors) ∩ Z^n in Hermite form. Its size is the rank.
std::vector<LatticePoint> saturated_lattice_basis(
    std::span<const LatticePoint> vectors);

// Integer c with sum c_i basis_i == p. Throws NotInLattice.
std::vector<std::int64_t> coordinates_in_lattice(
    const LatticePoint& p, std::span<const LatticePoint> basis);

// Surjection Z^n -> Z^(n-1) whose kernel is the saturated line through u.
struct ProjectionMap {
  IntMatrix matrix;
  LatticePoint kernel_vector;

  LatticePoint operator()(const LatticePoint& v) const {
    return matrix.apply(v);
  }
};

ProjectionMap projection_along(const LatticePoint& u);

// Surjection Z^n -> Z^(n-r) whose kernel is span_Q(sub_basis) ∩ Z^n.
IntMatrix quotient_map(std::span<const LatticePoint> sub_basis, std::size_t n);

std::vector<LatticePoint> quotient_coordinates(
    std::span<const LatticePoint> points,
    std::span<const LatticePoint> sub_basis, std::size_t n);

// Some rational solution of a x = b (free variables set to zero), or nullopt
// if the system is inconsistent.
std::optional<std::vector<Rational>> solve_rational(
    const IntMatrix& a, std::span<const Rational> b);

}  // namespace sparseprime
