#include "sparseprime/supports.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <string>

#include <json.hpp>

#include "sparseprime/error.hpp"

namespace sparseprime {

Support::Support(std::vector<LatticePoint> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorKind::EmptySupport, "a support must contain a point");
  }
  const std::size_t n = points_.front().size();
  for (const auto& p : points_) {
    if (p.size() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "support mixes points of length " + std::to_string(n) +
                      " and " + std::to_string(p.size()));
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Support::contains_origin() const {
  return std::any_of(points_.begin(), points_.end(), [](const auto& p) {
    return std::all_of(p.begin(), p.end(), [](auto x) { return x == 0; });
  });
}

std::optional<std::size_t> Support::find(const LatticePoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

SupportSystem::SupportSystem(std::size_t n, std::vector<Support> supports)
    : n_(n), supports_(std::move(supports)) {
  for (std::size_t j = 0; j < supports_.size(); ++j) {
    if (supports_[j].dimension() != n_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "support " + std::to_string(j + 1) + " has points of length " +
                      std::to_string(supports_[j].dimension()) +
                      ", expected " + std::to_string(n_));
    }
  }
}

bool SupportSystem::contains_origin() const {
  return std::all_of(supports_.begin(), supports_.end(),
                     [](const Support& s) { return s.contains_origin(); });
}

std::vector<std::size_t> SubsetWitness::one_based() const {
  std::vector<std::size_t> out(indices);
  for (auto& i : out) ++i;
  return out;
}

SubsetMask mask_of(const SubsetWitness& subset) {
  SubsetMask mask = 0;
  for (auto i : subset.indices) mask |= SubsetMask{1} << i;
  return mask;
}

SubsetWitness subset_of(SubsetMask mask) {
  SubsetWitness out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.indices.push_back(i);
  return out;
}

void check_enumeration_bound(std::size_t k, std::size_t bound) {
  if (k > bound || k >= 32) {
    throw Error(ErrorKind::TooLarge,
                "subset enumeration over " + std::to_string(k) +
                    " supports exceeds the bound " + std::to_string(bound));
  }
}

void for_each_subset(std::size_t k,
                     const std::function<bool(SubsetMask)>& visit) {
  std::vector<std::size_t> combo;
  for (std::size_t size = 1; size <= k; ++size) {
    combo.resize(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      SubsetMask mask = 0;
      for (auto i : combo) mask |= SubsetMask{1} << i;
      if (!visit(mask)) return;
      // Advance to the next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
}

SupportSystem normalize(const SupportSystem& system) {
  std::vector<Support> out;
  out.reserve(system.size());
  for (const Support& s : system.supports()) {
    const LatticePoint shift = s.points().front();
    std::vector<LatticePoint> moved;
    moved.reserve(s.size());
    for (const auto& p : s.points()) {
      LatticePoint q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] - shift[i];
      moved.push_back(std::move(q));
    }
    out.emplace_back(std::move(moved));
  }
  return SupportSystem(system.dimension(), std::move(out));
}

void require_origin(const SupportSystem& system, std::string_view operation) {
  if (!system.contains_origin()) {
    throw Error(ErrorKind::PreconditionFailed,
                std::string(operation) +
                    " expects every support to contain the origin; normalize "
                    "the system first");
  }
}

std::vector<LatticePoint> union_points(const SupportSystem& system,
                                       SubsetMask mask) {
  std::vector<LatticePoint> out;
  for (std::size_t j = 0; j < system.size(); ++j)
    if (mask & (SubsetMask{1} << j))
      out.insert(out.end(), system[j].points().begin(),
                 system[j].points().end());
  return out;
}

SubsetRanks::SubsetRanks(const SupportSystem& system)
    : n_(system.dimension()) {
  row_bases_.reserve(system.size());
  for (const Support& s : system.supports()) {
    auto h = hermite_normal_form(IntMatrix::from_rows(s.points(), n_));
    row_bases_.push_back(h.form.take_rows(0, h.rank).row_points());
  }
}

std::size_t SubsetRanks::operator()(SubsetMask mask) {
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  std::vector<LatticePoint> rows;
  for (std::size_t j = 0; j < row_bases_.size(); ++j)
    if (mask & (SubsetMask{1} << j))
      rows.insert(rows.end(), row_bases_[j].begin(), row_bases_[j].end());
  std::size_t r = rows.empty() ? 0 : rank(IntMatrix::from_rows(rows, n_));
  memo_.emplace(mask, r);
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::int64_t read_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) parse_fail(where, "expected an integer");
  return value.get<std::int64_t>();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + s + "'");
  }
  Rational q(s, 10);
  if (sgn(q.get_den()) == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return q;
}

SystemDocument parse_system(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) parse_fail("document", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "supports" && key != "lifts")
      parse_fail("document", "unknown field \"" + key + "\"");
  }
  if (!doc.contains("n")) parse_fail("document", "missing field \"n\"");
  if (!doc.contains("supports"))
    parse_fail("document", "missing field \"supports\"");
  const std::int64_t n = read_int(doc["n"], "n");
  if (n < 1) parse_fail("n", "ambient dimension must be positive");
  const json& raw_supports = doc["supports"];
  if (!raw_supports.is_array() || raw_supports.empty())
    parse_fail("supports", "expected a nonempty array of supports");

  std::vector<std::vector<LatticePoint>> raw_points;
  for (std::size_t j = 0; j < raw_supports.size(); ++j) {
    const std::string where = "supports[" + std::to_string(j) + "]";
    const json& support = raw_supports[j];
    if (!support.is_array()) parse_fail(where, "expected an array of points");
    if (support.empty()) {
      throw Error(ErrorKind::EmptySupport, where + " has no points");
    }
    std::vector<LatticePoint> points;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const std::string pw = where + "[" + std::to_string(i) + "]";
      const json& point = support[i];
      if (!point.is_array()) parse_fail(pw, "expected an array of integers");
      if (point.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorKind::DimensionMismatch,
                    pw + " has length " + std::to_string(point.size()) +
                        ", expected " + std::to_string(n));
      }
      LatticePoint p;
      for (std::size_t c = 0; c < point.size(); ++c)
        p.push_back(read_int(point[c], pw + "[" + std::to_string(c) + "]"));
      points.push_back(std::move(p));
    }
    raw_points.push_back(std::move(points));
  }

  std::vector<Support> supports;
  for (const auto& pts : raw_points) supports.emplace_back(pts);
  SystemDocument out{SupportSystem(static_cast<std::size_t>(n), supports),
                     std::nullopt};

  if (doc.contains("lifts")) {
    const json& raw_lifts = doc["lifts"];
    if (!raw_lifts.is_array() || raw_lifts.size() != raw_points.size())
      parse_fail("lifts", "expected one array of lifts per support");
    Lifts lifts;
    for (std::size_t j = 0; j < raw_points.size(); ++j) {
      const std::string where = "lifts[" + std::to_string(j) + "]";
      const json& row = raw_lifts[j];
      if (!row.is_array() || row.size() != raw_points[j].size())
        parse_fail(where, "expected one lift per point of supports[" +
                              std::to_string(j) + "]");
      std::map<LatticePoint, Rational> best;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const std::string lw = where + "[" + std::to_string(i) + "]";
        Rational value;
        if (row[i].is_string()) {
          try {
            value = parse_rational(row[i].get<std::string>());
          } catch (const Error& e) {
            parse_fail(lw, e.what());
          }
        } else if (row[i].is_number_integer()) {
          value = Rational(std::to_string(row[i].get<std::int64_t>()), 10);
        } else {
          parse_fail(lw, "expected a rational string such as \"3/4\"");
        }
        auto [it, inserted] = best.emplace(raw_points[j][i], value);
        if (!inserted && value < it->second) it->second = value;
      }
      std::vector<Rational> aligned;
      for (const auto& p : supports[j].points()) aligned.push_back(best.at(p));
      lifts.push_back(std::move(aligned));
    }
    out.lifts = std::move(lifts);
  }
  return out;
}

std::string serialize_system(const SupportSystem& system,
                             const std::optional<Lifts>& lifts) {
  nlohmann::ordered_json doc;
  doc["n"] = system.dimension();
  auto supports = nlohmann::ordered_json::array();
  for (const Support& s : system.supports()) supports.push_back(s.points());
  doc["supports"] = std::move(supports);
  if (lifts) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : *lifts) {
      auto values = nlohmann::ordered_json::array();
      for (const Rational& q : row) values.push_back(q.get_str());
      rows.push_back(std::move(values));
    }
    doc["lifts"] = std::move(rows);
  }
  return doc.dump();
}

}  // namespace sparseprime
