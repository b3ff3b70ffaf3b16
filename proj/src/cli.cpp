#include "ured/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "ured/acceptance.hpp"
#include "ured/digest.hpp"
#include "ured/errors.hpp"
#include "ured/generate.hpp"
#include "ured/json_io.hpp"
#include "ured/oracle.hpp"
#include "ured/version.hpp"

namespace ured {

namespace {

struct io_context {
  std::ostream* out;
  std::string output_path;
  std::map<std::string, std::string> input_digests;

  json load(const std::string& path) {
    const std::string text = read_text_file(path);
    input_digests[path] = digest_hex(text);
    return parse_json(text, path);
  }

  void emit(json report, const std::string& command) {
    report["version"] = std::string(kVersion);
    report["command"] = command;
    json inputs = json::object();
    for (const auto& [path, digest] : input_digests) inputs[path] = digest;
    report["inputs"] = std::move(inputs);
    const std::string text = dump_report(report);
    if (output_path.empty())
      *out << text;
    else
      write_text_file(output_path, text);
  }
};

norm_spec spec_from_flags(io_context& io, const std::string& norm_name,
                          const std::string& measure_path, int ground_size) {
  const norm_kind kind = parse_norm_kind(norm_name);
  norm_spec spec;
  if (kind == norm_kind::l2 || kind == norm_kind::triple) {
    if (measure_path.empty())
      throw input_error("norm '" + norm_name + "' needs --measure");
    spec = {kind, measure_from_json(io.load(measure_path))};
  } else {
    spec.kind = kind;
  }
  spec.validate(ground_size);
  return spec;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"uredkit: exact intersection indices, max-min measures, and "
               "discrete martingale certificates on finite function spaces"};
  app.require_subcommand(1);

  io_context io{&out, "", {}};
  app.add_option("--output", io.output_path, "Write the JSON report to this file");

  // indices
  std::string family_path;
  auto* indices_cmd = app.add_subcommand("indices", "Intersection indices of a set family");
  indices_cmd->add_option("--family", family_path, "Family JSON file")->required();

  // duality
  std::string duality_family;
  int max_len = 12;
  auto* duality_cmd =
      app.add_subcommand("duality", "Exact max-min measure LP with duality certificate");
  duality_cmd->add_option("--family", duality_family, "Family JSON file")->required();
  duality_cmd->add_option("--max-len", max_len, "Sequence length cap for the repetition search");

  // martingale build | check | bound
  auto* martingale_cmd = app.add_subcommand("martingale", "Martingale constructions and checks");
  martingale_cmd->require_subcommand(1);

  std::string build_family, build_g, build_emit;
  auto* build_cmd = martingale_cmd->add_subcommand(
      "build", "Two-step construction with certified sup-norm bound");
  build_cmd->add_option("--family", build_family, "Family JSON file")->required();
  build_cmd->add_option("--g", build_g, "Start function JSON file");
  build_cmd->add_option("--emit", build_emit, "Also write the martingale JSON here");

  std::string check_path, check_norm, check_measure;
  bool check_exact = false;
  auto* check_cmd =
      martingale_cmd->add_subcommand("check", "Validate a martingale file, optionally a norm");
  check_cmd->add_option("--martingale", check_path, "Martingale JSON file")->required();
  check_cmd->add_option("--norm", check_norm, "sup|l2|triple|euclidean");
  check_cmd->add_option("--measure", check_measure, "Measure JSON for l2/triple");
  check_cmd->add_flag("--exact", check_exact, "Rational-arithmetic norm comparison");

  std::string bound_families, bound_g;
  std::uint64_t materialize_limit = 250000;
  auto* bound_cmd = martingale_cmd->add_subcommand(
      "bound", "Certified growth-index upper bound for a family sequence");
  bound_cmd->add_option("--families", bound_families, "JSON file: array of families")->required();
  bound_cmd->add_option("--g", bound_g, "Start function JSON file (sup norm 1)");
  bound_cmd->add_option("--materialize-limit", materialize_limit,
                        "Skip witness construction above this many atoms");

  // modulus
  std::string mod_norm = "sup", mod_measure, mod_direction;
  double mod_epsilon = 1.0;
  std::uint64_t mod_seed = 0;
  search_budget mod_budget;
  auto* modulus_cmd =
      app.add_subcommand("modulus", "Directional rotundity modulus estimate");
  modulus_cmd->add_option("--norm", mod_norm, "sup|l2|triple|euclidean")->required();
  modulus_cmd->add_option("--measure", mod_measure, "Measure JSON for l2/triple");
  modulus_cmd->add_option("--direction", mod_direction, "Direction JSON file")->required();
  modulus_cmd->add_option("--epsilon", mod_epsilon, "Required separation in (0, 2]");
  modulus_cmd->add_option("--seed", mod_seed, "Search seed");
  modulus_cmd->add_option("--starts", mod_budget.starts, "Multi-start count");
  modulus_cmd->add_option("--iters", mod_budget.refine_iters, "Refinement iterations");

  // pur-check
  std::string pur_measure;
  int pur_trials = 1000;
  std::uint64_t pur_seed = 0;
  auto* pur_cmd =
      app.add_subcommand("pur-check", "Random trials of the renorming inequality chain");
  pur_cmd->add_option("--measure", pur_measure, "Strictly positive probability measure JSON")
      ->required();
  pur_cmd->add_option("--trials", pur_trials, "Number of random (f, x, y) trials");
  pur_cmd->add_option("--seed", pur_seed, "Trial seed");

  // acceptance
  std::uint64_t acc_seed = 0;
  auto* acceptance_cmd = app.add_subcommand("acceptance", "Run the full acceptance suite");
  acceptance_cmd->add_option("--seed", acc_seed, "Suite seed");

  std::vector<std::string> argv(args);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*indices_cmd) {
      const auto family = family_from_json(io.load(family_path));
      io.emit(report_to_json(compute_indices(family)), "indices");
      return 0;
    }
    if (*duality_cmd) {
      const auto family = family_from_json(io.load(duality_family));
      const auto cert = max_min_measure(family);
      const auto report = verify_duality(family, max_len);
      json j = report_to_json(report);
      j["certificate"] = report_to_json(cert);
      io.emit(std::move(j), "duality");
      return report.primal_dual_equal ? 0 : 1;
    }
    if (*build_cmd) {
      const auto family = family_from_json(io.load(build_family));
      function_vector g(family.ground.size);
      if (!build_g.empty()) g = function_from_json(io.load(build_g));
      const auto result = build_bump_martingale(family, g);
      if (!build_emit.empty())
        write_text_file(build_emit, dump_report(martingale_to_json(result.mart)));
      io.emit(report_to_json(result, build_emit.empty()), "martingale build");
      return 0;
    }
    if (*check_cmd) {
      const auto mart = martingale_from_json(io.load(check_path));
      const auto report = validate_martingale(mart);
      json j = report_to_json(report);
      const auto wp = find_walsh_paley_pairs(mart.filt);
      json omega = json::array();
      for (const auto& level : wp.levels)
        omega.push_back({{"pairs", level.pairs.size()},
                         {"omega_mass", rational_to_string(level.omega_mass)},
                         {"omega_is_full", level.omega_is_full}});
      j["walsh_paley"] = std::move(omega);
      bool ok = report.valid;
      if (!check_norm.empty() && report.valid) {
        int ground = 0;
        if (!mart.levels.empty() && !mart.levels[0].block_values.empty())
          ground = mart.levels[0].block_values[0].size();
        const auto spec = spec_from_flags(io, check_norm, check_measure, ground);
        const auto mono = check_norm_square_monotone(mart, spec, check_exact);
        j["monotonicity"] = report_to_json(mono);
        ok = ok && mono.holds;
      }
      io.emit(std::move(j), "martingale check");
      return ok ? 0 : 1;
    }
    if (*bound_cmd) {
      const auto doc = io.load(bound_families);
      const json& list = doc.is_array() ? doc : doc.at("families");
      std::vector<set_family> families;
      for (const auto& f : list) families.push_back(family_from_json(f));
      function_vector g;
      const bool have_g = !bound_g.empty();
      if (have_g) g = function_from_json(io.load(bound_g));
      const auto report = compute_index_bound(families, have_g ? &g : nullptr, materialize_limit);
      io.emit(report_to_json(report), "martingale bound");
      return 0;
    }
    if (*modulus_cmd) {
      modulus_query query;
      query.direction = to_real(function_from_json(io.load(mod_direction)));
      query.spec = spec_from_flags(io, mod_norm, mod_measure, query.direction.size());
      query.epsilon = mod_epsilon;
      query.seed = mod_seed;
      query.budget = mod_budget;
      io.emit(report_to_json(directional_modulus_estimate(query)), "modulus");
      return 0;
    }
    if (*pur_cmd) {
      const auto mu = measure_from_json(io.load(pur_measure));
      if (pur_trials < 1) throw input_error("--trials must be positive");
      rng gen = rng::from_seed(pur_seed).derive("pur-check");
      int violations = 0;
      double min_cs = std::numeric_limits<double>::infinity();
      double min_conv = min_cs;
      for (int trial = 0; trial < pur_trials; ++trial) {
        auto stream = gen.derive(static_cast<std::uint64_t>(trial));
        const auto f = random_function(stream, mu.size(), 3, 4);
        const auto x = random_function(stream, mu.size(), 3, 4);
        const auto y = random_function(stream, mu.size(), 3, 4);
        const auto report = pur_chain_check(mu, f, x, y);
        if (!report.all_hold) ++violations;
        min_cs = std::min(min_cs, report.cauchy_schwarz_rhs - report.functional_sq);
        min_conv = std::min(min_conv, report.convexity_rhs - report.cauchy_schwarz_rhs);
      }
      json j;
      j["trials"] = pur_trials;
      j["violations"] = violations;
      j["min_cauchy_schwarz_slack"] = min_cs;
      j["min_convexity_slack"] = min_conv;
      io.emit(std::move(j), "pur-check");
      return violations == 0 ? 0 : 1;
    }
    if (*acceptance_cmd) {
      const auto report = run_acceptance(acc_seed);
      const int code = print_acceptance(report, err);
      json j = acceptance_report_json(report);
      io.emit(std::move(j), "acceptance");
      return code;
    }
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace ured
