#include "sparseprime/decider.hpp"

#include <algorithm>
#include <string>

#include "sparseprime/dmit.hpp"
#include "sparseprime/error.hpp"
#include "sparseprime/polytope.hpp"
#include "sparseprime/transversal.hpp"

namespace sparseprime {

namespace {

constexpr std::string_view kPrimeNote =
    "prime in characteristic 0; radical prime over any algebraically closed "
    "field";
constexpr std::string_view kUnitNote =
    "unit ideal over any algebraically closed field";
constexpr std::string_view kNotPrimeNote =
    "proper ideal whose radical is not prime, over any algebraically closed "
    "field";

Verdict prime_verdict() {
  return Verdict{VerdictKind::GenericallyPrime, std::nullopt, std::nullopt,
                 std::string(kPrimeNote)};
}

}  // namespace

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::GenericUnitIdeal: return "generic-unit-ideal";
    case VerdictKind::GenericallyPrime: return "generically-prime";
    case VerdictKind::GenericallyNotPrime: return "generically-not-prime";
  }
  return "unknown";
}

Verdict decide(const SupportSystem& system, const DecideOptions& options) {
  require_origin(system, "decide");
  if (options.dmit_fast_path && is_dmit(system).holds) return prime_verdict();

  check_enumeration_bound(system.size(), options.enumeration_bound);
  if (!has_independent_transversal(system)) {
    auto witness = rank_condition_violation(system, options.enumeration_bound);
    return Verdict{VerdictKind::GenericUnitIdeal, witness, std::nullopt,
                   std::string(kUnitNote)};
  }

  SubsetRanks ranks(system);
  std::optional<Verdict> found;
  for_each_subset(system.size(), [&](SubsetMask mask) {
    auto subset = subset_of(mask);
    if (ranks(mask) != subset.size()) return true;
    const auto mv = restricted_mixed_volume(system, subset);
    if (mv.value >= 2) {
      found = Verdict{VerdictKind::GenericallyNotPrime, std::move(subset),
                      mv.value, std::string(kNotPrimeNote)};
      return false;
    }
    return true;
  });
  return found ? *found : prime_verdict();
}

SubsetWitness maximal_unimodular_subset(const SupportSystem& system,
                                        std::size_t bound) {
  DecideOptions options;
  options.enumeration_bound = bound;
  if (decide(system, options).kind != VerdictKind::GenericallyPrime) {
    throw Error(ErrorKind::PreconditionFailed,
                "maximal unimodular subset needs a generically prime system");
  }
  check_enumeration_bound(system.size(), bound);
  // Under the prime verdict every tight subset has mixed volume 1, and tight
  // subsets are closed under union.
  SubsetRanks ranks(system);
  SubsetMask union_mask = 0;
  for_each_subset(system.size(), [&](SubsetMask mask) {
    if (ranks(mask) == static_cast<std::size_t>(__builtin_popcount(mask)))
      union_mask |= mask;
    return true;
  });
  return subset_of(union_mask);
}

SupportSystem reduce_by(const SupportSystem& system, const SubsetWitness& k) {
  if (k.empty()) return system;
  const SubsetMask mask = mask_of(k);
  const auto points = union_points(system, mask);
  const std::size_t r = rank(points);
  if (r != k.size()) {
    throw Error(ErrorKind::RankMismatch,
                "cannot contract supports spanning rank " + std::to_string(r) +
                    " with " + std::to_string(k.size()) + " supports");
  }
  const std::size_t n = system.dimension();
  const auto basis = saturated_lattice_basis(points);
  const IntMatrix map = quotient_map(basis, n);
  std::vector<Support> remaining;
  for (std::size_t j = 0; j < system.size(); ++j) {
    if (mask & (SubsetMask{1} << j)) continue;
    std::vector<LatticePoint> image;
    for (const auto& p : system[j].points()) image.push_back(map.apply(p));
    remaining.emplace_back(std::move(image));
  }
  return normalize(SupportSystem(n - r, std::move(remaining)));
}

}  // namespace sparseprime
