// Command-line front end: profile ingestion, mechanism execution, oracle
// queries, verification suites and experiment runs.
//
// Exit codes: 0 success, 1 usage or input error, 2 when verify-sp finds
// deviations, ratio finds bound breaches, or lemmas fail.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "uav/experiments.hpp"
#include "uav/format.hpp"
#include "uav/model.hpp"
#include "uav/multi_uav.hpp"
#include "uav/oracles.hpp"
#include "uav/profile_io.hpp"
#include "uav/verification.hpp"

namespace {

using namespace uav;

struct ProfileArgs {
  std::string path;
  std::string example;
  double alpha = -1.0;  // <0: keep the profile's value
  double z0 = -1.0;
};

void add_profile_options(CLI::App* cmd, ProfileArgs& args,
                         bool with_alpha_override = true) {
  auto* profile = cmd->add_option("--profile", args.path, "Profile JSON file");
  auto* example = cmd->add_option("--example", args.example,
                                  "Built-in profile: intro-2user, "
                                  "obnoxious-2user, percentile-14user");
  profile->excludes(example);
  if (with_alpha_override)
    cmd->add_option("--alpha", args.alpha, "Override the arena path-loss exponent");
  cmd->add_option("--z0", args.z0, "Override the arena altitude");
}

Profile resolve_profile(const ProfileArgs& args) {
  if (args.path.empty() && args.example.empty())
    throw CLI::ValidationError("--profile", "either --profile or --example is required");
  Profile prof = args.example.empty() ? load_profile(args.path)
                                      : example_profile(args.example);
  if (args.alpha >= 0.0) prof.arena.alpha = args.alpha;
  if (args.z0 >= 0.0) prof.arena.altitude = args.z0;
  prof.validate();
  return prof;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write to '" + out_path + "'");
  out << text;
}

std::string placement_json(const Placement& p) {
  return "{\"x\": " + format_double(p.x) + ", \"y\": " + format_double(p.y) +
         ", \"z0\": " + format_double(p.z) + "}";
}

std::string multi_placement_json(const MultiPlacement& mp) {
  std::string out = "{\"placements\": [";
  for (std::size_t i = 0; i < mp.size(); ++i) {
    if (i) out += ", ";
    out += placement_json(mp.placements[i]);
  }
  return out + "]}";
}

const char* method_name(OracleMethod m) {
  switch (m) {
    case OracleMethod::ClosedForm: return "closed-form";
    case OracleMethod::CornerEnumeration: return "corner-enumeration";
    case OracleMethod::ConvexSearch: return "convex-search";
    case OracleMethod::GridSearch: return "grid-search";
  }
  return "unknown";
}

std::string preference_json(const UserReport& u) {
  std::string out;
  if (u.pref)
    out += std::string(", \"pref\": \"") +
           (*u.pref == Preference::Adverse ? "adverse" : "favorable") + "\"";
  if (u.prefs)
    out += std::string(", \"prefs\": [\"") +
           (u.prefs->toward_first == Preference::Adverse ? "adverse" : "favorable") +
           "\", \"" +
           (u.prefs->toward_second == Preference::Adverse ? "adverse" : "favorable") +
           "\"]";
  return out;
}

std::string deviation_json(const DeviationReport& d) {
  return "{\"user\": " + std::to_string(d.user_index) +
         ", \"true\": {\"x\": " + format_double(d.truthful.x) +
         ", \"y\": " + format_double(d.truthful.y) + preference_json(d.truthful) +
         "}, \"deviation\": {\"x\": " + format_double(d.deviation.x) +
         ", \"y\": " + format_double(d.deviation.y) + preference_json(d.deviation) +
         "}, \"objective_true\": " + format_double(d.objective_truthful) +
         ", \"objective_deviating\": " + format_double(d.objective_deviating) +
         ", \"improvement\": " + format_double(d.improvement) + "}";
}

std::string ratio_json(const RatioReport& r) {
  return "{\"mechanism\": \"" + r.mechanism +
         "\", \"alpha\": " + format_double(r.alpha) + ", \"profile\": \"" +
         r.profile_digest +
         "\", \"mechanism_objective\": " + format_double(r.mechanism_objective) +
         ", \"oracle_objective\": " + format_double(r.oracle_objective) +
         ", \"ratio\": " + format_double(r.ratio) +
         ", \"bound\": " + format_double(r.bound) +
         ", \"violation\": " + (r.violation ? "true" : "false") + "}";
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!item.empty()) values.push_back(std::stod(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.empty()) throw std::invalid_argument("empty numeric list");
  return values;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  for (double v : parse_double_list(text)) values.push_back(static_cast<int>(v));
  return values;
}

int run_place(const ProfileArgs& pargs, const std::string& name, int k,
              const std::string& out) {
  const Profile prof = resolve_profile(pargs);
  const Mechanism mech = make_mechanism(name, k);
  const MultiPlacement mp = mech.run(prof);
  const std::string text =
      mp.size() == 1 ? placement_json(mp.placements[0]) : multi_placement_json(mp);
  write_output(out, text + "\n");
  return 0;
}

int run_opt(const ProfileArgs& pargs, const std::string& game, int k,
            const std::string& out) {
  const Profile prof = resolve_profile(pargs);
  std::string text;
  if (game == "favorable") {
    const OracleResult r = opt_favorable(prof);
    text = "{\"placement\": " + placement_json(r.placement) +
           ", \"value\": " + format_double(r.value) + ", \"method\": \"" +
           method_name(r.method) + "\"}";
  } else if (game == "obnoxious") {
    const OracleResult r = opt_obnoxious(prof);
    text = "{\"placement\": " + placement_json(r.placement) +
           ", \"value\": " + format_double(r.value) + ", \"method\": \"" +
           method_name(r.method) + "\"}";
  } else if (game == "dual") {
    const OracleResult r = opt_dual_single(prof);
    text = "{\"placement\": " + placement_json(r.placement) +
           ", \"value\": " + format_double(r.value) + ", \"method\": \"" +
           method_name(r.method) + "\"}";
  } else if (game == "two-uav") {
    const MultiOracleResult r = opt_two_uav(prof);
    text = "{\"placements\": " + multi_placement_json(r.placements) +
           ", \"value\": " + format_double(r.value) + ", \"method\": \"" +
           method_name(r.method) + "\"}";
  } else if (game == "k-obnoxious") {
    const MultiOracleResult r = opt_k_obnoxious(prof, k);
    text = "{\"placements\": " + multi_placement_json(r.placements) +
           ", \"value\": " + format_double(r.value) + ", \"method\": \"" +
           method_name(r.method) + "\"}";
  } else {
    throw CLI::ValidationError("--game", "unknown game '" + game + "'");
  }
  write_output(out, text + "\n");
  return 0;
}

int run_verify_sp(const ProfileArgs& pargs, const std::string& name, int k,
                  double tol, int fuzz, std::uint64_t seed,
                  const std::string& out) {
  const Profile prof = resolve_profile(pargs);
  const Mechanism mech = make_mechanism(name, k);
  std::vector<DeviationReport> reports = check_strategyproof(mech, prof, tol);
  if (fuzz > 0) {
    std::vector<DeviationReport> extra =
        fuzz_strategyproof(mech, prof, fuzz, seed, tol);
    reports.insert(reports.end(), extra.begin(), extra.end());
  }
  std::string text;
  for (const auto& d : reports) text += deviation_json(d) + "\n";
  text += "violations=" + std::to_string(reports.size()) + "\n";
  write_output(out, text);
  return reports.empty() ? 0 : 2;
}

int run_ratio(const ProfileArgs& pargs, const std::string& name, int k,
              const std::string& alphas, const std::string& out) {
  Profile prof = resolve_profile(pargs);
  const Mechanism mech = make_mechanism(name, k);
  const std::vector<RatioReport> reports =
      check_ratio(mech, prof, parse_double_list(alphas));
  std::string text;
  std::size_t violations = 0;
  double max_ratio = 0.0, bound_at_max = 0.0;
  for (const auto& r : reports) {
    text += ratio_json(r) + "\n";
    if (r.violation) ++violations;
    if (r.ratio >= max_ratio) {
      max_ratio = r.ratio;
      bound_at_max = r.bound;
    }
  }
  text += "violations=" + std::to_string(violations) +
          " max_ratio=" + format_double(max_ratio) +
          " bound=" + format_double(bound_at_max) + "\n";
  write_output(out, text);
  return violations == 0 ? 0 : 2;
}

int run_simulate(const std::string& experiment, const std::string& n_list,
                 int trials, const std::string& dist, const std::string& ratios,
                 std::uint64_t seed, double z0, bool summary,
                 const std::string& out) {
  ExperimentTable table;
  if (experiment == "fig2") {
    RatioExperimentConfig cfg;
    if (!n_list.empty()) cfg.n_list = parse_int_list(n_list);
    if (trials > 0) cfg.trials = trials;
    if (!dist.empty()) cfg.location = DistributionSpec::parse(dist);
    if (z0 >= 0.0) cfg.arena.altitude = z0;
    cfg.seed = seed;
    table = run_ratio_experiment(cfg);
  } else if (experiment == "fig3") {
    CornerMatchConfig cfg;
    if (!n_list.empty()) cfg.n_list = parse_int_list(n_list);
    if (trials > 0) cfg.trials = trials;
    if (!dist.empty()) cfg.location = DistributionSpec::parse(dist);
    if (z0 >= 0.0) cfg.arena.altitude = z0;
    cfg.seed = seed;
    table = run_corner_match_experiment(cfg);
  } else if (experiment == "fig4") {
    DualConvergenceConfig cfg;
    if (!n_list.empty()) cfg.n_list = parse_int_list(n_list);
    if (trials > 0) cfg.trials = trials;
    if (!dist.empty()) cfg.location = DistributionSpec::parse(dist);
    if (!ratios.empty()) cfg.n2_over_n1 = parse_double_list(ratios);
    if (z0 >= 0.0) cfg.arena.altitude = z0;
    cfg.seed = seed;
    table = run_dual_convergence_experiment(cfg);
  } else {
    throw CLI::ValidationError("--experiment",
                               "expected fig2, fig3 or fig4, got '" + experiment + "'");
  }
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << "\n";
  write_output(out, summary ? table.summary_csv() : table.csv());
  if (!out.empty() && !summary) {
    std::ofstream sum(out + ".summary.csv", std::ios::binary);
    if (sum) sum << table.summary_csv();
  }
  return 0;
}

int run_lemmas(std::size_t samples, std::uint64_t seed) {
  const PowerInequalityReport rep = check_power_inequalities(samples, seed);
  std::cout << "samples=" << rep.samples
            << " lemma1_worst_margin=" << format_double(rep.worst_margin_lower)
            << " lemma2_worst_margin=" << format_double(rep.worst_margin_upper)
            << " pass=" << (rep.pass ? "true" : "false") << "\n";
  return rep.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategyproof UAV placement mechanisms, oracles and experiments"};
  app.require_subcommand(1);

  ProfileArgs pargs;
  std::string mechanism, game, out_path, format = "json";
  std::string experiment, n_list, dist, ratios, alphas = "2,3,4,6";
  int k = 2, trials = 0, fuzz = 0;
  double tol = 1e-9, z0 = -1.0;
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  bool summary = false;

  auto* place = app.add_subcommand("place", "Run a mechanism on a profile");
  add_profile_options(place, pargs);
  place->add_option("--mechanism", mechanism, "Mechanism name")->required();
  place->add_option("--k", k, "UAV count for multi-UAV mechanisms");
  place->add_option("--out", out_path, "Output file (default stdout)");
  place->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* opt = app.add_subcommand("opt", "Compute the social optimum");
  add_profile_options(opt, pargs);
  opt->add_option("--game", game,
                  "favorable | obnoxious | dual | two-uav | k-obnoxious")
      ->required();
  opt->add_option("--k", k, "UAV count for k-obnoxious");
  opt->add_option("--out", out_path, "Output file (default stdout)");
  opt->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* verify = app.add_subcommand("verify-sp", "Search for profitable deviations");
  add_profile_options(verify, pargs);
  verify->add_option("--mechanism", mechanism, "Mechanism name")->required();
  verify->add_option("--k", k, "UAV count for multi-UAV mechanisms");
  verify->add_option("--tol", tol, "Improvement tolerance");
  verify->add_option("--fuzz", fuzz, "Extra random deviations per user");
  verify->add_option("--seed", seed, "Seed for the fuzz deviations");
  verify->add_option("--out", out_path, "Output file (default stdout)");
  verify->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* ratio = app.add_subcommand("ratio", "Empirical ratio vs the proven bound");
  add_profile_options(ratio, pargs, /*with_alpha_override=*/false);
  ratio->add_option("--mechanism", mechanism, "Mechanism name")->required();
  ratio->add_option("--k", k, "UAV count for k-endpoints");
  ratio->add_option("--alpha", alphas, "Comma-separated alpha list")
      ->capture_default_str();
  ratio->add_option("--out", out_path, "Output file (default stdout)");
  ratio->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* sim = app.add_subcommand("simulate", "Run a convergence experiment");
  sim->add_option("--experiment", experiment, "fig2 | fig3 | fig4")->required();
  sim->add_option("--n-list", n_list, "Comma-separated user counts");
  sim->add_option("--trials", trials, "Trials per configuration");
  sim->add_option("--dist", dist,
                  "uniform | beta(a,b) | normal(mean,sd) | logistic(mean,scale); "
                  "negative mean centers on the arena midline");
  sim->add_option("--n2-over-n1", ratios, "Comma-separated mixes (fig4)");
  sim->add_option("--seed", seed, "Experiment seed");
  sim->add_option("--z0", z0, "UAV altitude (fig2 default 0.2, else 0)");
  sim->add_flag("--summary", summary, "Emit the aggregate table instead of trials");
  sim->add_option("--out", out_path,
                  "CSV output file; also writes <out>.summary.csv");
  sim->add_option("--format", format)->check(CLI::IsMember({"csv"}));

  auto* lemmas = app.add_subcommand("lemmas", "Check the power-inequality lemmas");
  lemmas->add_option("--samples", samples, "Random triples to draw")
      ->capture_default_str();
  lemmas->add_option("--seed", seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (place->parsed()) return run_place(pargs, mechanism, k, out_path);
    if (opt->parsed()) return run_opt(pargs, game, k, out_path);
    if (verify->parsed())
      return run_verify_sp(pargs, mechanism, k, tol, fuzz, seed, out_path);
    if (ratio->parsed()) return run_ratio(pargs, mechanism, k, alphas, out_path);
    if (sim->parsed())
      return run_simulate(experiment, n_list, trials, dist, ratios, seed, z0,
                          summary, out_path);
    if (lemmas->parsed()) return run_lemmas(samples, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
