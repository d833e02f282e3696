#include "sparseprime/dmit.hpp"

#include <algorithm>

#include "sparseprime/detail/matroid.hpp"

namespace sparseprime {

namespace {

bool is_zero(const LatticePoint& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace

DmitReport is_dmit(const SupportSystem& system) {
  require_origin(system, "is_dmit");
  DmitReport report;
  std::vector<DmitWitness> certificate;
  for (std::size_t j = 0; j < system.size(); ++j) {
    bool certified = false;
    for (const LatticePoint& u : system[j].points()) {
      if (is_zero(u)) continue;
      const ProjectionMap phi = projection_along(u);
      std::vector<std::vector<LatticePoint>> blocks(j + 1);
      for (std::size_t i = 0; i <= j; ++i)
        for (const auto& p : system[i].points()) blocks[i].push_back(phi(p));
      auto solution =
          detail::max_block_transversal(blocks, system.dimension() - 1);
      if (solution.chosen.size() < j + 1) {
        report.violating_set = SubsetWitness{solution.tight_blocks};
        return report;
      }
      if (!certified) {
        DmitWitness w{j, {}, {}, u};
        for (auto [i, idx] : solution.chosen) {
          if (i < j)
            w.earlier.push_back(system[i][idx]);
          else
            w.first = system[i][idx];
        }
        certificate.push_back(std::move(w));
        certified = true;
      }
    }
    if (!certified) {
      // A_j = {0} spans nothing.
      report.violating_set = SubsetWitness{{j}};
      return report;
    }
  }
  report.holds = true;
  report.certificate = std::move(certificate);
  return report;
}

std::optional<SubsetWitness> dmit_bruteforce(const SupportSystem& system,
                                             std::size_t bound) {
  check_enumeration_bound(system.size(), bound);
  SubsetRanks ranks(system);
  std::optional<SubsetWitness> found;
  for_each_subset(system.size(), [&](SubsetMask mask) {
    auto subset = subset_of(mask);
    if (ranks(mask) <= subset.size()) {
      found = std::move(subset);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace sparseprime
