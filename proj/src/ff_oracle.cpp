#include "sparseprime/ff_oracle.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <string>
#include <thread>

#include "sparseprime/detail/finite_field.hpp"
#include "sparseprime/error.hpp"

namespace sparseprime {

namespace {

using ff::PrimeField;
using XPoly = ff::Poly<PrimeField>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_alignment(const SupportSystem& system,
                     const CoefficientAssignment& coeffs) {
  if (coeffs.values.size() != system.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "coefficient assignment has the wrong number of supports");
  }
  for (std::size_t j = 0; j < system.size(); ++j)
    if (coeffs.values[j].size() != system[j].size())
      throw Error(ErrorKind::DimensionMismatch,
                  "coefficient assignment misaligned with support " +
                      std::to_string(j + 1));
}

// Laurent polynomial in (x, y) cleared of denominators, as coefficients in y
// of polynomials in x.
std::vector<XPoly> clear_bivariate(const PrimeField& f, const Support& support,
                                   const std::vector<std::uint64_t>& values) {
  std::int64_t min_x = support[0][0], min_y = support[0][1];
  std::int64_t max_y = support[0][1];
  for (const auto& p : support.points()) {
    min_x = std::min(min_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  std::vector<XPoly> by_y(static_cast<std::size_t>(max_y - min_y + 1));
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto dx = static_cast<std::size_t>(support[i][0] - min_x);
    const auto dy = static_cast<std::size_t>(support[i][1] - min_y);
    auto& row = by_y[dy];
    if (row.size() <= dx) row.resize(dx + 1, 0);
    row[dx] = f.add(row[dx], values[i] % f.characteristic());
  }
  for (auto& row : by_y) ff::trim(f, row);
  while (!by_y.empty() && by_y.back().empty()) by_y.pop_back();
  return by_y;
}

XPoly strip_x(XPoly p) {
  auto first = std::find_if(p.begin(), p.end(), [](auto c) { return c != 0; });
  p.erase(p.begin(), first);
  return p;
}

template <class F>
ff::Poly<F> strip_low(const F& f, ff::Poly<F> p) {
  std::size_t k = 0;
  while (k < p.size() && f.is_zero(p[k])) ++k;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
  return p;
}

XPoly x_content(const PrimeField& f, const std::vector<XPoly>& by_y) {
  XPoly g;
  for (const auto& row : by_y) g = ff::gcd(f, g, row);
  return strip_x(std::move(g));
}

}  // namespace

void validate(const FieldSpec& field) {
  const std::uint64_t q = field.q;
  bool prime = q >= 3 && q < (std::uint64_t{1} << 31);
  for (std::uint64_t d = 2; prime && d * d <= q; ++d)
    if (q % d == 0) prime = false;
  if (!prime) {
    throw Error(ErrorKind::PreconditionFailed,
                "field size " + std::to_string(q) +
                    " is not a prime in [3, 2^31)");
  }
}

CoefficientAssignment random_coefficients(const SupportSystem& system,
                                          const FieldSpec& field,
                                          std::uint64_t seed) {
  validate(field);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(1, field.q - 1);
  CoefficientAssignment out;
  out.seed = seed;
  for (const Support& s : system.supports()) {
    std::vector<std::uint64_t> row(s.size());
    for (auto& c : row) c = draw(rng);
    out.values.push_back(std::move(row));
  }
  return out;
}

std::int64_t rational_root_count(const SupportSystem& system,
                                 const CoefficientAssignment& coeffs,
                                 const FieldSpec& field, std::uint64_t budget) {
  validate(field);
  check_alignment(system, coeffs);
  const std::size_t n = system.dimension();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (points > budget / field.q) {
      throw Error(ErrorKind::BudgetExceeded,
                  std::to_string(field.q) + "^" + std::to_string(n) +
                      " exceeds the enumeration budget " +
                      std::to_string(budget));
    }
    points *= field.q;
  }
  const PrimeField f(field.q);
  const std::uint64_t units = field.q - 1;

  // powers[i][t][e - lo]: (t+1)^e for exponents of coordinate i.
  std::vector<std::int64_t> lo(n, 0), hi(n, 0);
  for (const Support& s : system.supports())
    for (const auto& p : s.points())
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
  std::vector<std::vector<std::vector<std::uint64_t>>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].resize(units);
    for (std::uint64_t t = 0; t < units; ++t) {
      const std::uint64_t x = t + 1;
      const std::uint64_t xinv = f.inv(x);
      auto& row = powers[i][t];
      row.resize(static_cast<std::size_t>(hi[i] - lo[i] + 1));
      for (std::int64_t e = lo[i]; e <= hi[i]; ++e)
        row[static_cast<std::size_t>(e - lo[i])] =
            e >= 0 ? f.pow(x, static_cast<std::uint64_t>(e))
                   : f.pow(xinv, static_cast<std::uint64_t>(-e));
    }
  }

  std::int64_t count = 0;
  std::vector<std::uint64_t> at(n, 0);
  while (true) {
    bool all_zero = true;
    for (std::size_t j = 0; j < system.size() && all_zero; ++j) {
      std::uint64_t value = 0;
      const Support& s = system[j];
      for (std::size_t a = 0; a < s.size(); ++a) {
        std::uint64_t term = coeffs.values[j][a] % field.q;
        for (std::size_t i = 0; i < n; ++i)
          term = f.mul(term, powers[i][at[i]][static_cast<std::size_t>(
                                 s[a][i] - lo[i])]);
        value = f.add(value, term);
      }
      all_zero = value == 0;
    }
    if (all_zero) ++count;
    std::size_t i = 0;
    while (i < n && ++at[i] == units) at[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::int64_t exact_torus_count_2d(const SupportSystem& system,
                                  const CoefficientAssignment& coeffs,
                                  const FieldSpec& field) {
  validate(field);
  check_alignment(system, coeffs);
  if (system.dimension() != 2 || system.size() != 2) {
    throw Error(ErrorKind::PreconditionFailed,
                "exact torus counting needs two supports in Z^2");
  }
  const PrimeField f(field.q);
  const auto f1 = clear_bivariate(f, system[0], coeffs.values[0]);
  const auto f2 = clear_bivariate(f, system[1], coeffs.values[1]);
  if (f1.empty() || f2.empty()) {
    throw Error(ErrorKind::PreconditionFailed, "zero polynomial");
  }
  if (ff::degree<PrimeField>(ff::gcd(f, x_content(f, f1), x_content(f, f2))) > 0) {
    throw Error(ErrorKind::CommonFactor, "polynomials share a factor in x");
  }
  auto res = ff::resultant_y(f, f1, f2);
  if (res.empty()) {
    throw Error(ErrorKind::CommonFactor,
                "resultant vanishes identically; the polynomials share a "
                "factor");
  }
  res = strip_x(std::move(res));

  std::mt19937_64 rng(0x5eed);
  std::int64_t count = 0;
  for (const auto& p : ff::irreducible_factors(f, res, rng)) {
    const ff::ExtensionField k(f, p);
    auto specialize = [&](const std::vector<XPoly>& g) {
      ff::Poly<ff::ExtensionField> out;
      for (const auto& c : g) out.push_back(k.reduce(c));
      ff::trim(k, out);
      return out;
    };
    auto g1 = specialize(f1);
    auto g2 = specialize(f2);
    if (g1.empty() && g2.empty()) {
      throw Error(ErrorKind::CommonFactor,
                  "both polynomials vanish on a line x = const");
    }
    auto g = strip_low(k, ff::gcd(k, std::move(g1), std::move(g2)));
    if (ff::degree<ff::ExtensionField>(g) <= 0) continue;
    count += static_cast<std::int64_t>(k.degree_over_base()) *
             ff::radical_degree(k, std::move(g));
  }
  return count;
}

RootCountReport bkk_experiment(const SupportSystem& system,
                               const FieldSpec& field, std::size_t trials,
                               std::uint64_t seed, CountMode mode,
                               std::size_t threads) {
  validate(field);
  RootCountReport report;
  report.counts.assign(trials, 0);
  auto run = [&](std::size_t t) {
    const auto coeffs =
        random_coefficients(system, field, splitmix64(seed ^ splitmix64(t)));
    report.counts[t] = mode == CountMode::Exact2d
                           ? exact_torus_count_2d(system, coeffs, field)
                           : rational_root_count(system, coeffs, field);
  };

  threads = std::max<std::size_t>(1, std::min(threads, trials));
  if (threads == 1) {
    for (std::size_t t = 0; t < trials; ++t) run(t);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < trials; t += threads) run(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (auto c : report.counts) ++report.histogram[c];
  std::size_t best = 0;
  for (const auto& [count, freq] : report.histogram)
    if (freq > best) {
      best = freq;
      report.mode = count;
    }
  return report;
}

}  // namespace sparseprime
