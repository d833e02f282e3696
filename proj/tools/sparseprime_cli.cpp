// Command-line front end. Every result is a single JSON object on stdout;
// diagnostics go to stderr.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparseprime/decider.hpp"
#include "sparseprime/dmit.hpp"
#include "sparseprime/error.hpp"
#include "sparseprime/ff_oracle.hpp"
#include "sparseprime/polytope.hpp"
#include "sparseprime/supports.hpp"
#include "sparseprime/transversal.hpp"
#include "sparseprime/tropical.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sparseprime;

constexpr const char* kSchemaVersion = "1";

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json one_based(const SubsetWitness& w) { return w.one_based(); }

json rational(const Rational& q) { return q.get_str(); }

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational(q));
  return out;
}

json echo(const SupportSystem& system, const std::optional<Lifts>& lifts = {}) {
  return json::parse(serialize_system(system, lifts));
}

json cell_json(const MixedCell& cell) {
  json pieces = json::array();
  for (const auto& piece : cell.pieces) pieces.push_back(piece);
  return json{{"pieces", pieces},
              {"total_dim", cell.total_dim},
              {"piece_dims", cell.piece_dims},
              {"dual_dim", cell.dual_dim},
              {"functional", rationals(cell.functional)}};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::EmptySupport:
    case ErrorKind::NotInLattice:
    case ErrorKind::RankMismatch:
    case ErrorKind::PreconditionFailed:
      return 1;
    case ErrorKind::TooLarge:
    case ErrorKind::BudgetExceeded:
      return 2;
    default:
      return 3;
  }
}

struct Options {
  std::string input;
  bool timing = false;
  std::size_t threads = 1;
  std::size_t bound = kDefaultEnumerationBound;
  bool certificate = false;
  std::string subset;
  std::uint64_t q = 10007;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::string mode = "rational";
  std::optional<std::uint64_t> lift_seed;
  std::int64_t lift_range = 10;
  std::int64_t lift_denominator = 1;
};

json run_decide(const Options& opt, const SupportSystem& system) {
  DecideOptions options;
  options.enumeration_bound = opt.bound;
  const Verdict v = decide(system, options);
  json out{{"verdict", to_string(v.kind)}};
  if (v.witness) out["witness"] = one_based(*v.witness);
  if (v.mixed_volume) out["mixed_volume"] = *v.mixed_volume;
  out["char_note"] = v.char_note;
  if (opt.certificate) {
    json cert;
    if (v.kind == VerdictKind::GenericallyPrime) {
      const auto k = maximal_unimodular_subset(system, opt.bound);
      cert["maximal_unimodular_subset"] = one_based(k);
      const auto reduced = reduce_by(system, k);
      cert["reduced_system"] = echo(reduced);
      cert["reduced_dmit"] = is_dmit(reduced).holds;
    } else if (v.witness) {
      SubsetRanks ranks(system);
      cert["witness_rank"] = ranks(*v.witness);
      cert["witness_size"] = v.witness->size();
    }
    out["certificate"] = cert;
  }
  return out;
}

json run_transversal(const SupportSystem& system) {
  const auto t = max_partial_transversal(system);
  json choices = json::array();
  for (const auto& c : t.choices)
    choices.push_back(json{{"support", c.support + 1}, {"point", c.point}});
  json out{{"perfect", t.size == system.size()},
           {"size", t.size},
           {"choices", choices}};
  out["tight_set"] = t.tight_set ? one_based(*t.tight_set) : json(nullptr);
  return out;
}

json run_dmit(const SupportSystem& system) {
  const auto r = is_dmit(system);
  json out{{"holds", r.holds}};
  out["violating_set"] =
      r.violating_set ? one_based(*r.violating_set) : json(nullptr);
  if (r.certificate) {
    json cert = json::array();
    for (const auto& w : *r.certificate)
      cert.push_back(json{{"support", w.support + 1},
                          {"earlier", w.earlier},
                          {"first", w.first},
                          {"second", w.second}});
    out["certificate"] = cert;
  }
  return out;
}

json run_mixedvol(const Options& opt, const SupportSystem& system) {
  SubsetWitness subset;
  if (opt.subset.empty()) {
    for (std::size_t j = 0; j < system.size(); ++j) subset.indices.push_back(j);
  } else {
    std::stringstream items(opt.subset);
    std::string item;
    while (std::getline(items, item, ',')) {
      std::size_t j = 0, used = 0;
      try {
        j = std::stoul(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size() || j < 1 || j > system.size())
        throw Error(ErrorKind::ParseError, "bad subset index '" + item + "'");
      subset.indices.push_back(j - 1);
    }
    std::sort(subset.indices.begin(), subset.indices.end());
    subset.indices.erase(
        std::unique(subset.indices.begin(), subset.indices.end()),
        subset.indices.end());
  }
  SubsetRanks ranks(system);
  const auto mv = restricted_mixed_volume(system, subset);
  return json{{"subset", one_based(subset)},
              {"rank", ranks(subset)},
              {"mixed_volume", mv.value}};
}

json run_oracle(const Options& opt, const SupportSystem& system) {
  CountMode mode;
  if (opt.mode == "rational") {
    mode = CountMode::Rational;
  } else if (opt.mode == "exact2d") {
    mode = CountMode::Exact2d;
  } else {
    throw Error(ErrorKind::ParseError, "unknown mode " + opt.mode);
  }
  const FieldSpec field{opt.q};
  const auto report =
      bkk_experiment(system, field, opt.trials, opt.seed, mode, opt.threads);
  json histogram = json::object();
  for (const auto& [count, freq] : report.histogram)
    histogram[std::to_string(count)] = freq;
  json out{{"q", opt.q},
           {"trials", opt.trials},
           {"seed", opt.seed},
           {"mode", opt.mode},
           {"counts", report.counts},
           {"histogram", histogram},
           {"most_frequent", report.mode}};
  if (system.size() == system.dimension()) {
    std::vector<LatticePolytope> polytopes;
    for (const auto& s : system.supports()) polytopes.push_back(convex_hull(s.points()));
    out["mixed_volume"] = mixed_volume(polytopes).value;
  }
  return out;
}

json run_tropical(const Options& opt, const SystemDocument& doc) {
  Lifts lifts;
  if (opt.lift_seed) {
    lifts = random_lifts(doc.system, *opt.lift_seed, opt.lift_range,
                         opt.lift_denominator);
  } else if (doc.lifts) {
    lifts = *doc.lifts;
  } else {
    throw Error(ErrorKind::ParseError,
                "input has no \"lifts\"; pass --random-lifts to sample them");
  }
  const TropicalData data{normalize(doc.system), lifts};
  const auto complex = stable_intersection(data);
  const auto report = corollary_check(data, opt.bound);
  json facets = json::array(), ridges = json::array(),
       incidence = json::array();
  for (const auto& c : complex.facets) facets.push_back(cell_json(c));
  for (const auto& c : complex.ridges) ridges.push_back(cell_json(c));
  for (auto [f, r] : complex.incidence) incidence.push_back({f, r});
  json lifts_json = json::array();
  for (const auto& row : lifts) lifts_json.push_back(rationals(row));
  return json{{"lifts", lifts_json},
              {"facets", facets},
              {"ridges", ridges},
              {"incidence", incidence},
              {"connected_through_codim_one", report.ctc1},
              {"condition_holds", report.condition_holds},
              {"consistent", report.consistent}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primeness of generic sparse Laurent polynomial systems"};
  app.require_subcommand(0, 1);
  Options opt;
  bool version = false;
  app.add_flag("--version", version, "Print the report schema version");
  app.add_flag("--timing", opt.timing, "Add elapsed time to the report");
  app.add_option("--parallel", opt.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", opt.bound, "Largest k for subset enumeration");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "System JSON file (default: stdin)");
    return sub;
  };
  auto* decide_cmd = add_input(app.add_subcommand("decide", "Classify the generic ideal"));
  decide_cmd->add_flag("--certificate", opt.certificate,
                       "Include a verifiable certificate");
  add_input(app.add_subcommand("transversal", "Maximum independent partial transversal"));
  add_input(app.add_subcommand("dmit", "Strengthened transversal condition"));
  auto* mv_cmd = add_input(app.add_subcommand("mixedvol", "Restricted mixed volume"));
  mv_cmd->add_option("--subset", opt.subset, "1-based support indices, e.g. 1,2");
  auto* oracle_cmd = add_input(app.add_subcommand("oracle", "Count torus roots over F_q"));
  oracle_cmd->add_option("--q", opt.q, "Field size (prime)");
  oracle_cmd->add_option("--trials", opt.trials, "Coefficient draws");
  oracle_cmd->add_option("--seed", opt.seed, "Random seed");
  oracle_cmd->add_option("--mode", opt.mode, "rational | exact2d")
      ->check(CLI::IsMember({"rational", "exact2d"}));
  auto* tropical_cmd = add_input(app.add_subcommand("tropical", "Stable intersection"));
  tropical_cmd->add_option("--random-lifts", opt.lift_seed,
                           "Sample lifts with this seed");
  tropical_cmd->add_option("--lift-range", opt.lift_range,
                           "Sampled lifts lie in [-range, range]");
  tropical_cmd->add_option("--lift-denominator", opt.lift_denominator,
                           "Denominator of sampled lifts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (version) {
    std::cout << json{{"schema_version", kSchemaVersion}}.dump() << '\n';
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto start = std::chrono::steady_clock::now();
    const SystemDocument doc = parse_system(read_input(opt.input));
    const SupportSystem system = normalize(doc.system);
    json report{{"command", command},
                {"input", echo(system, command == "tropical" ? doc.lifts
                                                             : std::nullopt)}};
    json result;
    if (command == "decide") result = run_decide(opt, system);
    else if (command == "transversal") result = run_transversal(system);
    else if (command == "dmit") result = run_dmit(system);
    else if (command == "mixedvol") result = run_mixedvol(opt, system);
    else if (command == "oracle") result = run_oracle(opt, doc.system);
    else result = run_tropical(opt, doc);
    report.update(result);
    if (opt.timing) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      report["timing_seconds"] = elapsed.count();
    }
    std::cout << report.dump() << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
