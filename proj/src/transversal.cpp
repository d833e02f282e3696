#include "sparseprime/transversal.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "sparseprime/detail/matroid.hpp"
#include "sparseprime/error.hpp"

namespace sparseprime {
namespace detail {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Element {
  std::size_t block;
  std::size_t index;
  const LatticePoint* vector;
};

bool is_zero(const LatticePoint& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

// For every element outside the current set: either nullopt (adding it keeps
// the set independent) or the members of the current set on its fundamental
// circuit.
class CircuitOracle {
 public:
  CircuitOracle(const std::vector<Element>& ground,
                const std::vector<std::size_t>& current, std::size_t n)
      : current_(current), columns_(n, current.size()) {
    for (std::size_t c = 0; c < current.size(); ++c) {
      const LatticePoint& v = *ground[current[c]].vector;
      for (std::size_t r = 0; r < n; ++r) columns_(r, c) = static_cast<long>(v[r]);
    }
  }

  // Returns false when the vector is independent of the current set;
  // otherwise fills `circuit` with the element ids it depends on.
  bool dependent(const LatticePoint& v, std::vector<std::size_t>& circuit) const {
    circuit.clear();
    std::vector<Rational> rhs(v.begin(), v.end());
    auto coeffs = solve_rational(columns_, rhs);
    if (!coeffs) return false;
    for (std::size_t c = 0; c < coeffs->size(); ++c)
      if (sgn((*coeffs)[c]) != 0) circuit.push_back(current_[c]);
    return true;
  }

 private:
  const std::vector<std::size_t>& current_;
  IntMatrix columns_;
};

}  // namespace

BlockTransversal max_block_transversal(
    const std::vector<std::vector<LatticePoint>>& blocks, std::size_t n) {
  std::vector<Element> ground;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < blocks[b].size(); ++i)
      if (!is_zero(blocks[b][i])) ground.push_back({b, i, &blocks[b][i]});

  const std::size_t m = ground.size();
  std::vector<bool> in_set(m, false);
  std::vector<std::size_t> block_owner(blocks.size(), kNone);
  std::vector<std::size_t> current;

  // Greedy start: most of the work is usually done here.
  for (std::size_t e = 0; e < m; ++e) {
    if (block_owner[ground[e].block] != kNone) continue;
    std::vector<LatticePoint> trial;
    for (auto x : current) trial.push_back(*ground[x].vector);
    trial.push_back(*ground[e].vector);
    if (rank(trial) == trial.size()) {
      in_set[e] = true;
      block_owner[ground[e].block] = e;
      current.push_back(e);
    }
  }

  std::vector<std::size_t> circuit;
  while (true) {
    CircuitOracle oracle(ground, current, n);
    // Exchange graph: x -> y when current - x + y is linearly independent,
    // y -> x when it respects the partition.
    std::vector<std::vector<std::size_t>> out_edges(m);
    std::vector<bool> source(m, false), sink(m, false);
    for (std::size_t y = 0; y < m; ++y) {
      if (in_set[y]) continue;
      const std::size_t owner = block_owner[ground[y].block];
      sink[y] = owner == kNone;
      if (!oracle.dependent(*ground[y].vector, circuit)) {
        source[y] = true;
        for (auto x : current) out_edges[x].push_back(y);
      } else {
        for (auto x : circuit) out_edges[x].push_back(y);
      }
      if (owner == kNone) {
        for (auto x : current) out_edges[y].push_back(x);
      } else {
        out_edges[y].push_back(owner);
      }
    }
    for (auto& edges : out_edges) std::sort(edges.begin(), edges.end());

    std::vector<std::size_t> parent(m, kNone);
    std::vector<bool> reached(m, false);
    std::deque<std::size_t> queue;
    for (std::size_t y = 0; y < m; ++y)
      if (source[y]) {
        reached[y] = true;
        queue.push_back(y);
      }
    std::size_t end = kNone;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      if (sink[v]) {
        end = v;
        break;
      }
      for (auto w : out_edges[v]) {
        if (reached[w]) continue;
        reached[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }

    if (end == kNone) {
      BlockTransversal result;
      for (auto x : current)
        result.chosen.emplace_back(ground[x].block, ground[x].index);
      std::sort(result.chosen.begin(), result.chosen.end());
      if (current.size() < blocks.size()) {
        // Blocks none of whose elements are reachable attain the min-max.
        std::vector<bool> touched(blocks.size(), false);
        for (std::size_t e = 0; e < m; ++e)
          if (reached[e]) touched[ground[e].block] = true;
        for (std::size_t b = 0; b < blocks.size(); ++b)
          if (!touched[b]) result.tight_blocks.push_back(b);
      }
      return result;
    }

    for (std::size_t v = end; v != kNone; v = parent[v]) in_set[v] = !in_set[v];
    current.clear();
    std::fill(block_owner.begin(), block_owner.end(), kNone);
    for (std::size_t e = 0; e < m; ++e)
      if (in_set[e]) {
        current.push_back(e);
        block_owner[ground[e].block] = e;
      }
  }
}

}  // namespace detail

PartialTransversal max_partial_transversal(const SupportSystem& system) {
  std::vector<std::vector<LatticePoint>> blocks;
  blocks.reserve(system.size());
  for (const Support& s : system.supports()) blocks.push_back(s.points());
  auto solution = detail::max_block_transversal(blocks, system.dimension());

  PartialTransversal out;
  out.size = solution.chosen.size();
  for (auto [b, i] : solution.chosen)
    out.choices.push_back({b, system[b][i]});
  if (out.size < system.size()) {
    out.tight_set = SubsetWitness{solution.tight_blocks};
  }
  return out;
}

bool has_independent_transversal(const SupportSystem& system) {
  return max_partial_transversal(system).size == system.size();
}

std::optional<SubsetWitness> rank_condition_violation(
    const SupportSystem& system, std::size_t bound) {
  check_enumeration_bound(system.size(), bound);
  SubsetRanks ranks(system);
  std::optional<SubsetWitness> found;
  for_each_subset(system.size(), [&](SubsetMask mask) {
    const auto subset = subset_of(mask);
    if (ranks(mask) < subset.size()) {
      found = subset;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace sparseprime
