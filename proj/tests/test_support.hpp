#pragma once

// Generators and slow reference implementations used only by the tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "sparseprime/linalg.hpp"
#include "sparseprime/supports.hpp"
#include "sparseprime/transversal.hpp"

namespace testing_support {

using namespace sparseprime;

inline SupportSystem make_system(std::size_t n,
                                 std::vector<std::vector<LatticePoint>> supports) {
  std::vector<Support> out;
  for (auto& s : supports) out.emplace_back(std::move(s));
  return SupportSystem(n, std::move(out));
}

inline LatticePoint unit(std::size_t n, std::size_t i) {
  LatticePoint p(n, 0);
  p[i] = 1;
  return p;
}

inline LatticePoint zero(std::size_t n) { return LatticePoint(n, 0); }

// Rank by plain Gaussian elimination over Q; deliberately not Bareiss.
inline std::size_t rational_rank(const std::vector<LatticePoint>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vectors) m.emplace_back(v.begin(), v.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<LatticePoint> union_of(const SupportSystem& s,
                                          const std::vector<std::size_t>& j) {
  std::vector<LatticePoint> out;
  for (auto i : j)
    for (const auto& p : s[i].points()) out.push_back(p);
  return out;
}

inline void for_each_nonempty_subset(
    std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1u << j)) subset.push_back(j);
    fn(subset);
  }
}

// Exhaustive search over all choices u_j ∈ A_j.
inline bool brute_force_transversal(const SupportSystem& s) {
  const std::size_t k = s.size();
  std::vector<std::size_t> at(k, 0);
  if (k == 0) return true;
  while (true) {
    std::vector<LatticePoint> choice;
    for (std::size_t j = 0; j < k; ++j) choice.push_back(s[j][at[j]]);
    if (rational_rank(choice) == k) return true;
    std::size_t j = 0;
    while (j < k && ++at[j] == s[j].size()) at[j++] = 0;
    if (j == k) return false;
  }
}

// min over J (including ∅) of rank(∪_J A_j) + k - |J|.
inline std::size_t rado_defect_bound(const SupportSystem& s) {
  std::size_t best = s.size();
  for_each_nonempty_subset(s.size(), [&](const std::vector<std::size_t>& j) {
    best = std::min(best, rational_rank(union_of(s, j)) + s.size() - j.size());
  });
  return best;
}

// Condition (1) of the strengthened transversal property, by enumeration.
inline bool brute_force_dmit(const SupportSystem& s) {
  bool ok = true;
  for_each_nonempty_subset(s.size(), [&](const std::vector<std::size_t>& j) {
    if (rational_rank(union_of(s, j)) < j.size() + 1) ok = false;
  });
  return ok;
}

// DMIT holds iff duplicating any single support keeps an independent
// transversal.
inline bool duplication_dmit(const SupportSystem& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::vector<Support> supports = s.supports();
    supports.push_back(s[j]);
    if (!has_independent_transversal(SupportSystem(s.dimension(), supports)))
      return false;
  }
  return true;
}

// Z^n / L is torsion-free for L spanned by `rows`.
inline bool quotient_torsion_free(const std::vector<LatticePoint>& rows,
                                  std::size_t n) {
  for (const auto& d : smith_invariants(IntMatrix::from_rows(rows, n)))
    if (d != 1) return false;
  return true;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(uniform(static_cast<std::int64_t>(lo),
                                            static_cast<std::int64_t>(hi)));
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  LatticePoint point(std::size_t n, std::int64_t lo, std::int64_t hi) {
    LatticePoint p(n);
    for (auto& x : p) x = uniform(lo, hi);
    return p;
  }

  std::vector<LatticePoint> points(std::size_t n, std::size_t count,
                                   std::int64_t lo, std::int64_t hi) {
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(point(n, lo, hi));
    return out;
  }

  // Supports containing the origin, so that they are already normalized up
  // to translation.
  SupportSystem system(std::size_t n, std::size_t k, std::size_t max_points,
                       std::int64_t lo, std::int64_t hi) {
    std::vector<Support> supports;
    for (std::size_t j = 0; j < k; ++j) {
      auto pts = points(n, index(1, max_points), lo, hi);
      pts.push_back(zero(n));
      supports.emplace_back(std::move(pts));
    }
    return SupportSystem(n, std::move(supports));
  }

  // Systems drawn from a low-rank sublattice now and then, so that every
  // verdict shows up often.
  SupportSystem mixed_system(std::size_t n, std::size_t k, std::size_t max_points,
                             std::int64_t lo, std::int64_t hi) {
    if (!coin(0.5)) return system(n, k, max_points, lo, hi);
    const std::size_t r = index(1, n);
    const auto gens = points(n, r, -1, 1);
    std::vector<Support> supports;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<LatticePoint> pts{zero(n)};
      const std::size_t count = index(1, max_points);
      for (std::size_t i = 0; i < count; ++i) {
        LatticePoint p(n, 0);
        for (const auto& g : gens) {
          const auto c = uniform(lo, hi) / 2;
          for (std::size_t t = 0; t < n; ++t) p[t] += c * g[t];
        }
        pts.push_back(std::move(p));
      }
      supports.emplace_back(std::move(pts));
    }
    return SupportSystem(n, std::move(supports));
  }

  // Random unimodular matrix as a product of elementary operations.
  IntMatrix unimodular(std::size_t n, std::size_t steps = 8) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) {
      if (coin()) m(0, 0) = -1;
      return m;
    }
    for (std::size_t s = 0; s < steps; ++s) {
      const std::size_t a = index(0, n - 1);
      std::size_t b = index(0, n - 2);
      if (b >= a) ++b;
      const long c = static_cast<long>(uniform(-2, 2));
      for (std::size_t col = 0; col < n; ++col) m(a, col) += c * m(b, col);
      if (coin(0.2)) m.swap_rows(a, b);
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

inline SupportSystem transform(const SupportSystem& s, const IntMatrix& g) {
  std::vector<Support> out;
  for (const auto& sup : s.supports()) {
    std::vector<LatticePoint> pts;
    for (const auto& p : sup.points()) pts.push_back(g.apply(p));
    out.emplace_back(std::move(pts));
  }
  return SupportSystem(s.dimension(), std::move(out));
}

inline SupportSystem translate(const SupportSystem& s, std::size_t j,
                               const LatticePoint& t) {
  std::vector<Support> out = s.supports();
  std::vector<LatticePoint> pts;
  for (auto p : s[j].points()) {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += t[i];
    pts.push_back(std::move(p));
  }
  out[j] = Support(std::move(pts));
  return SupportSystem(s.dimension(), std::move(out));
}

inline SupportSystem permute(const SupportSystem& s,
                             const std::vector<std::size_t>& order) {
  std::vector<Support> out;
  for (auto j : order) out.push_back(s[j]);
  return SupportSystem(s.dimension(), std::move(out));
}

}  // namespace testing_support
