// Command-line front end: enumeration, counting, evaluation, factorization
// and verification with stable machine-readable output.
//
// Exit codes: 0 success, 1 failed check or internal inconsistency,
// 2 precondition/budget violation, 3 parse or I/O error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "luinv/counting.hpp"
#include "luinv/invariants.hpp"
#include "luinv/io.hpp"
#include "luinv/perm.hpp"
#include "luinv/states.hpp"
#include "luinv/verify.hpp"
#include "luinv/version.hpp"

namespace {

using luinv::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitParse = 3;

struct CommonOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000'000;
  int jobs = 1;
  std::string format = "plain";
  bool full_degree = false;
};

void add_common(CLI::App* cmd, CommonOptions& common, const std::vector<std::string>& formats) {
  cmd->add_option("--seed", common.seed, "Seed for all randomness (default 1)");
  cmd->add_option("--budget", common.budget,
                  "Elementary-step / term cap for enumeration and evaluation (default 1e9)");
  cmd->add_option("--jobs", common.jobs, "Worker cap (default 1)")->check(CLI::PositiveNumber);
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember(formats));
  cmd->add_flag("--full-degree", common.full_degree,
                "Report degrees in the doubled (polynomial-degree) convention");
}

Json header(const std::string& command, const CommonOptions& common) {
  return Json{{"version", luinv::kVersion},
              {"command", command},
              {"seed", common.seed},
              {"budget", common.budget},
              {"jobs", common.jobs}};
}

void print_plain_header(const std::string& command, const CommonOptions& common) {
  std::cout << "# luinv " << luinv::kVersion << " command=" << command
            << " seed=" << common.seed << " budget=" << common.budget << "\n";
}

int reported_degree(int m, const CommonOptions& common) {
  return common.full_degree ? 2 * m : m;
}

std::vector<int> parse_shape(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      dims.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw luinv::ParseError("bad shape component '" + part + "'");
    }
  }
  if (dims.empty()) throw luinv::ParseError("empty shape");
  return dims;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw luinv::ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw luinv::ParseError("cannot parse '" + path + "': " + e.what());
  }
}

std::string perms_csv(const luinv::PermTuple& t) {
  std::string out;
  for (int i = 0; i < t.arity(); ++i) {
    if (i) out += '|';
    const auto ol = t.slot(i).one_line();
    for (std::size_t j = 0; j < ol.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(ol[j]);
    }
  }
  return out;
}

// ---- orbits ----

struct OrbitsArgs {
  int k = 3;
  int m = 1;
  bool connected = false;
  CommonOptions common;
};

int run_orbits(const OrbitsArgs& args) {
  luinv::EnumerateOptions opts;
  opts.budget = args.common.budget;
  opts.jobs = args.common.jobs;
  const auto orbits = luinv::enumerate_orbits(args.k, args.m, args.connected, opts);

  if (args.common.format == "json") {
    Json doc = header("orbits", args.common);
    doc["k"] = args.k;
    doc["m"] = reported_degree(args.m, args.common);
    doc["connected_only"] = args.connected;
    doc["count"] = orbits.size();
    Json list = Json::array();
    for (const auto& key : orbits) list.push_back(luinv::orbit_to_json(key, args.k));
    doc["orbits"] = std::move(list);
    std::cout << doc.dump(2) << "\n";
  } else if (args.common.format == "csv") {
    std::cout << "k,m,connected,perms\n";
    for (const auto& key : orbits)
      std::cout << args.k << ',' << reported_degree(args.m, args.common) << ','
                << (key.connected() ? 1 : 0) << ',' << perms_csv(key.tuple()) << '\n';
  } else if (args.common.format == "dot") {
    int index = 0;
    for (const auto& key : orbits)
      std::cout << luinv::covering_to_dot(luinv::to_covering_graph(key.tuple()),
                                          "cover_" + std::to_string(++index));
  } else {
    print_plain_header("orbits", args.common);
    for (const auto& key : orbits)
      std::cout << "degree=" << reported_degree(args.m, args.common)
                << (key.connected() ? " connected " : " split     ")
                << luinv::tuple_to_json(key.tuple(), args.k)["perms"].dump() << "\n";
    std::cout << "total " << orbits.size() << "\n";
  }
  return kExitOk;
}

// ---- count ----

struct CountArgs {
  int k = 3;
  int max_m = 4;
  bool no_cross_check = false;
  CommonOptions common;
};

int run_count(const CountArgs& args) {
  luinv::ConnectedCountOptions opts;
  opts.enum_budget = args.common.budget;
  opts.cross_check = !args.no_cross_check;
  opts.jobs = args.common.jobs;
  const auto table = luinv::connected_counts(args.k, args.max_m, opts);

  if (args.common.format == "json") {
    Json doc = header("count", args.common);
    doc.update(luinv::count_table_to_json(table));
    doc["cross_check"] = opts.cross_check ? "ok" : "skipped";
    if (args.common.full_degree) doc["degree_convention"] = "doubled";
    std::cout << doc.dump(2) << "\n";
  } else if (args.common.format == "csv") {
    std::cout << luinv::count_table_to_csv(table);
  } else {
    print_plain_header("count", args.common);
    std::cout << "degree  dim  connected\n";
    for (int m = 1; m <= table.max_m; ++m)
      std::cout << reported_degree(m, args.common) << "  " << table.dims[m - 1].str() << "  "
                << table.connected[m - 1].str() << "\n";
    std::cout << "cross-check: " << (opts.cross_check ? "ok" : "skipped") << "\n";
  }
  return kExitOk;
}

// ---- eval ----

struct EvalArgs {
  std::string state_file;
  std::string orbit_file;
  std::string kind;  // "", "pure" or "mixed"
  CommonOptions common;
};

int run_eval(const EvalArgs& args) {
  const Json state_doc = load_json_file(args.state_file);
  const Json orbit_doc = load_json_file(args.orbit_file);
  luinv::ParsedOrbit parsed = luinv::orbit_from_json(orbit_doc);

  luinv::InvariantKind kind = parsed.kind;
  if (!args.kind.empty())
    kind = args.kind == "mixed" ? luinv::InvariantKind::mixed : luinv::InvariantKind::pure;
  if (luinv::is_mixed_state_json(state_doc) && kind != luinv::InvariantKind::mixed)
    throw luinv::ShapeError("mixed state file needs a mixed-kind orbit");

  luinv::EvalOptions opts;
  opts.term_budget = args.common.budget;
  opts.jobs = args.common.jobs;

  const luinv::InvariantSpec spec{kind, luinv::OrbitKey(parsed.tuple)};
  luinv::Complex value;
  if (kind == luinv::InvariantKind::mixed) {
    value = luinv::eval_mixed(spec, luinv::mixed_from_json(state_doc), opts);
  } else {
    value = luinv::eval_pure(spec, luinv::pure_from_json(state_doc), opts);
  }

  if (args.common.format == "json") {
    Json doc = header("eval", args.common);
    doc["kind"] = kind == luinv::InvariantKind::mixed ? "mixed" : "pure";
    doc["degree"] = reported_degree(spec.degree(), args.common);
    doc["value"] = Json::array({value.real(), value.imag()});
    std::cout << doc.dump(2) << "\n";
  } else {
    print_plain_header("eval", args.common);
    std::printf("[%.17g, %.17g]\n", value.real(), value.imag());
  }
  return kExitOk;
}

// ---- factor ----

struct FactorArgs {
  std::string orbit_file;
  CommonOptions common;
};

int run_factor(const FactorArgs& args) {
  const Json orbit_doc = load_json_file(args.orbit_file);
  luinv::ParsedOrbit parsed = luinv::orbit_from_json(orbit_doc);
  const auto comps = luinv::components(parsed.tuple);

  // Multiplicities over the sorted component list.
  std::vector<std::pair<luinv::OrbitKey, int>> grouped;
  for (const auto& key : comps) {
    if (!grouped.empty() && grouped.back().first == key)
      ++grouped.back().second;
    else
      grouped.emplace_back(key, 1);
  }

  if (args.common.format == "json") {
    Json doc = header("factor", args.common);
    Json list = Json::array();
    for (const auto& [key, mult] : grouped) {
      Json entry = luinv::orbit_to_json(key, parsed.kind == luinv::InvariantKind::pure
                                                 ? key.arity() + 1
                                                 : key.arity());
      entry["multiplicity"] = mult;
      list.push_back(std::move(entry));
    }
    doc["components"] = std::move(list);
    std::cout << doc.dump(2) << "\n";
  } else {
    print_plain_header("factor", args.common);
    for (const auto& [key, mult] : grouped)
      std::cout << "x" << mult << "  degree=" << reported_degree(key.degree(), args.common) << "  "
                << luinv::tuple_to_json(key.tuple(), parsed.parties)["perms"].dump() << "\n";
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> suites;
  int k = 3;
  int m = 0;       // 0: use 1..max_m
  int max_m = 2;
  std::string shape_text;
  std::string bigger_text;
  int trials = 20;
  int num_states = 0;  // 0: derived from the dimension
  bool diagnostic = false;
  double tol_invariance = 1e-10;
  double tol_multiplicativity = 1e-10;
  double tol_pure_mixed = 1e-12;
  double tol_padding = 1e-12;
  double tol_conjugation = 1e-12;
  CommonOptions common;
};

const std::set<std::string> kSuites = {"series",        "invariance", "multiplicativity",
                                       "basis",         "independence", "pure-mixed",
                                       "padding",       "conjugation"};

int run_verify(const VerifyArgs& args) {
  std::set<std::string> selected(args.suites.begin(), args.suites.end());
  if (args.all) selected = kSuites;
  if (selected.empty())
    throw luinv::PreconditionError("verify: select suites with --suite or --all");
  for (const auto& s : selected)
    if (!kSuites.count(s)) throw luinv::PreconditionError("verify: unknown suite '" + s + "'");

  std::vector<int> degrees;
  if (args.m > 0)
    degrees.push_back(args.m);
  else
    for (int m = 1; m <= args.max_m; ++m) degrees.push_back(m);
  const int top_degree = degrees.back();

  const bool needs_shape = selected.size() > 1 || !selected.count("series");
  luinv::SystemShape shape;
  if (!args.shape_text.empty()) shape.dims = parse_shape(args.shape_text);
  if (needs_shape && shape.dims.empty())
    throw luinv::PreconditionError("verify: the selected suites need --shape");

  luinv::SystemShape bigger;
  if (!args.bigger_text.empty())
    bigger.dims = parse_shape(args.bigger_text);
  else if (!shape.dims.empty()) {
    bigger = shape;
    for (int& d : bigger.dims) ++d;
  }

  luinv::EvalOptions eval;
  eval.term_budget = args.common.budget;
  eval.jobs = args.common.jobs;

  std::vector<luinv::CheckReport> reports;
  std::uint64_t seed = args.common.seed;
  auto next_seed = [&seed]() { return seed++; };

  if (selected.count("series"))
    reports.push_back(luinv::check_series_consistency(args.k, top_degree, args.common.budget,
                                                      args.common.jobs));
  if (selected.count("invariance"))
    for (int m : degrees)
      reports.push_back(luinv::check_invariance(args.k, m, shape, args.trials, next_seed(),
                                                args.tol_invariance, eval));
  if (selected.count("multiplicativity"))
    for (int m1 : degrees)
      for (int m2 : degrees)
        if (m1 <= m2 && m1 + m2 <= top_degree)
          reports.push_back(luinv::check_multiplicativity(args.k, m1, m2, shape, args.trials,
                                                          next_seed(), args.tol_multiplicativity,
                                                          eval));
  if (selected.count("basis"))
    for (int m : degrees) {
      const int dim = luinv::dim_invariants(args.k, m).convert_to<int>();
      const int states = args.num_states > 0 ? args.num_states : 2 * dim + 2;
      reports.push_back(luinv::check_basis_rank(args.k, m, shape, states, next_seed(),
                                                args.diagnostic, eval));
    }
  if (selected.count("independence"))
    reports.push_back(
        luinv::check_algebraic_independence(args.k, top_degree, shape, next_seed(), eval));
  if (selected.count("pure-mixed"))
    for (int m : degrees)
      reports.push_back(luinv::check_pure_mixed(args.k, m, shape, args.trials, next_seed(),
                                               args.tol_pure_mixed, eval));
  if (selected.count("padding"))
    for (int m : degrees)
      reports.push_back(luinv::check_padding(args.k, m, shape, bigger, args.trials, next_seed(),
                                             args.tol_padding, eval));
  if (selected.count("conjugation"))
    for (int m : degrees)
      reports.push_back(luinv::check_conjugation_symmetry(args.k, m, shape, args.trials,
                                                          next_seed(), args.tol_conjugation,
                                                          eval));

  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed;

  if (args.common.format == "json") {
    Json doc = header("verify", args.common);
    doc["k"] = args.k;
    doc["all_passed"] = all_passed;
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(luinv::report_to_json(r));
    doc["checks"] = std::move(list);
    std::cout << doc.dump(2) << "\n";
  } else {
    print_plain_header("verify", args.common);
    for (const auto& r : reports) {
      std::printf("%s %-45s max_residual=%.3e tol=%.1e\n", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.max_residual, r.tolerance);
      if (!r.note.empty()) std::cout << "     note: " << r.note << "\n";
    }
    std::cout << (all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local unitary invariants of multipartite states"};
  app.set_version_flag("--version", luinv::kVersion);
  app.require_subcommand(1);

  OrbitsArgs orbits_args;
  auto* orbits_cmd = app.add_subcommand("orbits", "Enumerate canonical tuple orbits");
  orbits_cmd->add_option("--k", orbits_args.k, "Number of parties (arity k-1)")->required();
  orbits_cmd->add_option("--m", orbits_args.m, "Degree (covering sheets)")->required();
  orbits_cmd->add_flag("--connected", orbits_args.connected, "Connected coverings only");
  add_common(orbits_cmd, orbits_args.common, {"plain", "json", "csv", "dot"});

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Dimensions and connected-cover counts");
  count_cmd->add_option("--k", count_args.k, "Number of parties")->required();
  count_cmd->add_option("--max-m", count_args.max_m, "Largest degree")->required();
  count_cmd->add_flag("--no-cross-check", count_args.no_cross_check,
                      "Skip the enumeration cross-check");
  add_common(count_cmd, count_args.common, {"plain", "json", "csv"});

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one invariant on a state file");
  eval_cmd->add_option("--state", eval_args.state_file, "State JSON file")->required();
  eval_cmd->add_option("--orbit", eval_args.orbit_file, "Orbit JSON file")->required();
  eval_cmd->add_option("--kind", eval_args.kind, "pure or mixed (default: inferred)")
      ->check(CLI::IsMember({"pure", "mixed"}));
  add_common(eval_cmd, eval_args.common, {"plain", "json"});

  FactorArgs factor_args;
  auto* factor_cmd = app.add_subcommand("factor", "Split an orbit into connected components");
  factor_cmd->add_option("--orbit", factor_args.orbit_file, "Orbit JSON file")->required();
  add_common(factor_cmd, factor_args.common, {"plain", "json"});

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_flag("--all", verify_args.all, "Run every suite");
  verify_cmd->add_option("--suite", verify_args.suites, "Suite name (repeatable)");
  verify_cmd->add_option("--k", verify_args.k, "Number of parties")->required();
  verify_cmd->add_option("--m", verify_args.m, "Single degree");
  verify_cmd->add_option("--max-m", verify_args.max_m, "Degrees 1..max-m (default 2)");
  verify_cmd->add_option("--shape", verify_args.shape_text, "Party dimensions, e.g. 3,3,3");
  verify_cmd->add_option("--bigger-shape", verify_args.bigger_text,
                         "Padding target (default: every dimension + 1)");
  verify_cmd->add_option("--trials", verify_args.trials, "Trials per numerical check");
  verify_cmd->add_option("--states", verify_args.num_states, "States for the basis rank check");
  verify_cmd->add_flag("--diagnostic", verify_args.diagnostic,
                       "Observe sub-stable basis ranks instead of refusing");
  verify_cmd->add_option("--tol-invariance", verify_args.tol_invariance, "Default 1e-10");
  verify_cmd->add_option("--tol-multiplicativity", verify_args.tol_multiplicativity,
                         "Default 1e-10");
  verify_cmd->add_option("--tol-pure-mixed", verify_args.tol_pure_mixed, "Default 1e-12");
  verify_cmd->add_option("--tol-padding", verify_args.tol_padding, "Default 1e-12");
  verify_cmd->add_option("--tol-conjugation", verify_args.tol_conjugation, "Default 1e-12");
  add_common(verify_cmd, verify_args.common, {"plain", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (orbits_cmd->parsed()) return run_orbits(orbits_args);
    if (count_cmd->parsed()) return run_count(count_args);
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (factor_cmd->parsed()) return run_factor(factor_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
  } catch (const luinv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const luinv::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const luinv::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const luinv::InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
