#pragma once

// Brute-force checks with explicit coefficients over finite fields: count
// common zeros of f_1, ..., f_k in the torus, either F_q-rational ones by
// enumeration or (for two equations in two variables) all of them over the
// algebraic closure via resultants.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "sparseprime/supports.hpp"

namespace sparseprime {

struct FieldSpec {
  std::uint64_t q = 10007;
};

// Throws PreconditionFailed unless q is a prime in [3, 2^31).
void validate(const FieldSpec& field);

// One nonzero residue per support point, aligned with Support::points().
struct CoefficientAssignment {
  std::vector<std::vector<std::uint64_t>> values;
  std::uint64_t seed = 0;
};

CoefficientAssignment random_coefficients(const SupportSystem& system,
                                          const FieldSpec& field,
                                          std::uint64_t seed);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Common zeros in (F_q^*)^n. Throws BudgetExceeded when q^n > budget.
std::int64_t rational_root_count(
    const SupportSystem& system, const CoefficientAssignment& coeffs,
    const FieldSpec& field, std::uint64_t budget = kDefaultEnumerationBudget);

// Distinct common zeros in the torus over the algebraic closure of F_q, for
// n = k = 2. Throws CommonFactor when the two polynomials share a factor.
std::int64_t exact_torus_count_2d(const SupportSystem& system,
                                  const CoefficientAssignment& coeffs,
                                  const FieldSpec& field);

enum class CountMode { Rational, Exact2d };

struct RootCountReport {
  std::vector<std::int64_t> counts;
  std::map<std::int64_t, std::size_t> histogram;
  std::int64_t mode = 0;  // most frequent count, smallest on ties
};

// Trial t draws coefficients from a generator seeded by (seed, t), so reports
// do not depend on `threads`.
RootCountReport bkk_experiment(const SupportSystem& system,
                               const FieldSpec& field, std::size_t trials,
                               std::uint64_t seed, CountMode mode,
                               std::size_t threads = 1);

}  // namespace sparseprime
