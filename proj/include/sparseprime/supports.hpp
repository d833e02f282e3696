#pragma once

// Support systems (A_1, ..., A_k) of finite subsets of Z^n, their JSON form,
// and subset bookkeeping shared by the combinatorial checks.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sparseprime/linalg.hpp"

namespace sparseprime {

// A finite, nonempty set of exponent vectors, kept sorted lexicographically.
class Support {
 public:
  explicit Support(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return points_.front().size(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

  bool contains_origin() const;
  // Index of p in points(), if present.
  std::optional<std::size_t> find(const LatticePoint& p) const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::vector<LatticePoint> points_;
};

class SupportSystem {
 public:
  SupportSystem(std::size_t n, std::vector<Support> supports);

  std::size_t dimension() const { return n_; }
  std::size_t size() const { return supports_.size(); }
  const Support& operator[](std::size_t j) const { return supports_[j]; }
  const std::vector<Support>& supports() const { return supports_; }

  // 0 ∈ A_j for every j.
  bool contains_origin() const;

  friend bool operator==(const SupportSystem&, const SupportSystem&) = default;

 private:
  std::size_t n_;
  std::vector<Support> supports_;
};

// A subset J of the support indices. Indices are 0-based in memory and
// reported 1-based.
struct SubsetWitness {
  std::vector<std::size_t> indices;

  bool empty() const { return indices.empty(); }
  std::size_t size() const { return indices.size(); }
  std::vector<std::size_t> one_based() const;

  friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
};

using SubsetMask = std::uint32_t;

SubsetMask mask_of(const SubsetWitness& subset);
SubsetWitness subset_of(SubsetMask mask);

// Largest k for which subset enumeration is attempted.
inline constexpr std::size_t kDefaultEnumerationBound = 20;

// Calls `visit` on every nonempty subset of {0..k-1}, ordered by size and then
// lexicographically on sorted indices, until `visit` returns false.
void for_each_subset(std::size_t k,
                     const std::function<bool(SubsetMask)>& visit);

void check_enumeration_bound(std::size_t k, std::size_t bound);

// Translate each support by its lexicographically smallest point.
SupportSystem normalize(const SupportSystem& system);

// Throws PreconditionFailed unless every support contains the origin.
void require_origin(const SupportSystem& system, std::string_view operation);

std::vector<LatticePoint> union_points(const SupportSystem& system,
                                       SubsetMask mask);

// Memoized rank of ∪_{j∈J} A_j over subsets J.
class SubsetRanks {
 public:
  explicit SubsetRanks(const SupportSystem& system);

  std::size_t operator()(SubsetMask mask);
  std::size_t operator()(const SubsetWitness& subset) {
    return (*this)(mask_of(subset));
  }

 private:
  std::size_t n_;
  std::vector<std::vector<LatticePoint>> row_bases_;
  std::unordered_map<SubsetMask, std::size_t> memo_;
};

// Lift values aligned index-for-index with each support's sorted points.
using Lifts = std::vector<std::vector<Rational>>;

struct SystemDocument {
  SupportSystem system;
  std::optional<Lifts> lifts;
};

// Canonical schema:
//   {"n": <int>, "supports": [[[<int>,...], ...], ...],
//    "lifts": [["p/q", ...], ...]}
// "lifts" is optional and aligned with the points as written. Duplicate points
// collapse; a duplicated point keeps the smaller lift.
SystemDocument parse_system(std::string_view json_text);
std::string serialize_system(const SupportSystem& system,
                             const std::optional<Lifts>& lifts = std::nullopt);

Rational parse_rational(std::string_view text);

}  // namespace sparseprime
