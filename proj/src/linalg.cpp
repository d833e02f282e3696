#include "sparseprime/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "sparseprime/error.hpp"

namespace sparseprime {

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorKind::BudgetExceeded,
                "integer " + value.get_str() + " does not fit in 64 bits");
  }
  return value.get_si();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticePoint> rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch,
                  "vector of length " + std::to_string(rows[r].size()) +
                      " in a set of dimension " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

LatticePoint IntMatrix::row(std::size_t r) const {
  LatticePoint out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = to_int64((*this)(r, c));
  return out;
}

std::vector<LatticePoint> IntMatrix::row_points() const {
  std::vector<LatticePoint> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::take_rows(std::size_t first, std::size_t count) const {
  IntMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

LatticePoint IntMatrix::apply(const LatticePoint& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "cannot apply a map on Z^" + std::to_string(cols_) +
                    " to a vector of length " + std::to_string(v.size()));
  }
  LatticePoint out(rows_);
  Integer acc;
  for (std::size_t r = 0; r < rows_; ++r) {
    acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc += (*this)(r, c) * static_cast<long>(v[c]);
    out[r] = to_int64(acc);
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  }
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) += (*this)(i, k) * rhs(k, j);
    }
  return out;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// rows (r, i) <- [[s, t], [-b/g, a/g]] * rows (r, i); determinant one.
void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const Integer& s,
                  const Integer& t, const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer top = s * m(r, c) + t * m(i, c);
    Integer bottom = u * m(r, c) + v * m(i, c);
    m(r, c) = std::move(top);
    m(i, c) = std::move(bottom);
  }
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source,
                      const Integer& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(target, c) += factor * m(source, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && sgn(m(r, c)) != 0) return false;
  return true;
}

}  // namespace

HermiteDecomposition hermite_normal_form(IntMatrix a) {
  HermiteDecomposition out;
  const std::size_t m = a.rows();
  IntMatrix u = IntMatrix::identity(m);
  std::size_t r = 0;
  Integer g, s, t;
  for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      if (sgn(a(r, c)) == 0) {
        a.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 a(r, c).get_mpz_t(), a(i, c).get_mpz_t());
      Integer lower_r = -a(i, c) / g;
      Integer lower_i = a(r, c) / g;
      combine_rows(a, r, i, s, t, lower_r, lower_i);
      combine_rows(u, r, i, s, t, lower_r, lower_i);
    }
    if (sgn(a(r, c)) == 0) continue;
    if (sgn(a(r, c)) < 0) {
      negate_row(a, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Integer q = -floor_div(a(i, c), a(r, c));
      add_row_multiple(a, i, r, q);
      add_row_multiple(u, i, r, q);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  out.form = std::move(a);
  out.transform = std::move(u);
  return out;
}

std::vector<Integer> smith_invariants(IntMatrix a) {
  // Alternate row and column Hermite reductions until diagonal.
  while (true) {
    auto h = hermite_normal_form(std::move(a));
    IntMatrix rows = h.form.take_rows(0, h.rank);
    if (is_diagonal(rows)) {
      a = std::move(rows);
      break;
    }
    auto hc = hermite_normal_form(rows.transpose());
    a = hc.form.take_rows(0, hc.rank).transpose();
    if (is_diagonal(a)) break;
  }
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (sgn(a(i, i)) != 0) d.push_back(abs(a(i, i)));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

std::size_t rank(const IntMatrix& input) {
  IntMatrix m = input;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank(std::span<const LatticePoint> vectors) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, vectors.front().size()));
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * prev);
}

std::vector<LatticePoint> integer_kernel(const IntMatrix& a) {
  auto h = hermite_normal_form(a.transpose());
  const std::size_t n = a.cols();
  IntMatrix kernel = h.transform.take_rows(h.rank, n - h.rank);
  auto canonical = hermite_normal_form(std::move(kernel));
  return canonical.form.take_rows(0, canonical.rank).row_points();
}

std::vector<LatticePoint> saturated_lattice_basis(
    std::span<const LatticePoint> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  IntMatrix m = IntMatrix::from_rows(vectors, n);
  if (rank(m) == 0) return {};
  // The saturation is the annihilator of the annihilator.
  auto orthogonal = integer_kernel(m);
  return integer_kernel(IntMatrix::from_rows(orthogonal, n));
}

std::optional<std::vector<Rational>> solve_rational(
    const IntMatrix& a, std::span<const Rational> b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) {
    throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  }
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a(r, c);
    m[r][cols] = b[r];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(m[i][cols]) != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = m[i][cols] / m[i][pivots[i]];
  return x;
}

std::vector<std::int64_t> coordinates_in_lattice(
    const LatticePoint& p, std::span<const LatticePoint> basis) {
  const std::size_t n = p.size();
  if (basis.empty()) {
    if (std::any_of(p.begin(), p.end(), [](auto x) { return x != 0; }))
      throw Error(ErrorKind::NotInLattice, "nonzero point, empty basis");
    return {};
  }
  IntMatrix columns = IntMatrix::from_rows(basis, n).transpose();
  std::vector<Rational> rhs(p.begin(), p.end());
  auto solution = solve_rational(columns, rhs);
  if (!solution) {
    throw Error(ErrorKind::NotInLattice, "point outside the span of the basis");
  }
  // The solution is unique for an independent basis; check it reproduces p.
  std::vector<std::int64_t> out;
  out.reserve(solution->size());
  for (const Rational& c : *solution) {
    if (c.get_den() != 1) {
      throw Error(ErrorKind::NotInLattice,
                  "point is a non-integer combination of the basis");
    }
    out.push_back(to_int64(c.get_num()));
  }
  LatticePoint back(n, 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) back[c] += out[i] * basis[i][c];
  if (back != p) {
    throw Error(ErrorKind::NotInLattice, "basis is not linearly independent");
  }
  return out;
}

ProjectionMap projection_along(const LatticePoint& u) {
  if (std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) {
    throw Error(ErrorKind::ZeroVector, "cannot project along the zero vector");
  }
  LatticePoint line[] = {u};
  return ProjectionMap{quotient_map(line, u.size()), u};
}

IntMatrix quotient_map(std::span<const LatticePoint> sub_basis, std::size_t n) {
  // Rows annihilating the sub-basis form a primitive system, hence the map is
  // onto Z^(n-r) with kernel exactly the saturated span.
  auto rows = integer_kernel(IntMatrix::from_rows(sub_basis, n));
  return IntMatrix::from_rows(rows, n);
}

std::vector<LatticePoint> quotient_coordinates(
    std::span<const LatticePoint> points,
    std::span<const LatticePoint> sub_basis, std::size_t n) {
  IntMatrix map = quotient_map(sub_basis, n);
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(map.apply(p));
  return out;
}

}  // namespace sparseprime
