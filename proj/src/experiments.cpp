#include "uav/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "uav/format.hpp"
#include "uav/mechanisms.hpp"
#include "uav/model.hpp"
#include "uav/oracles.hpp"
#include "uav/rng.hpp"

namespace uav {

namespace {

constexpr const char* kHeader =
    "experiment,mechanism,distribution,alpha,z0,n,n2_over_n1,trial,seed,metric,value";
constexpr const char* kSummaryHeader =
    "experiment,mechanism,distribution,alpha,z0,n,n2_over_n1,seed,metric,value";

void append_row(std::string& out, const ExperimentRow& r, bool with_trial) {
  out += r.experiment;
  out += ',';
  out += r.mechanism;
  out += ',';
  out += r.distribution;
  out += ',';
  out += format_double(r.alpha);
  out += ',';
  out += format_double(r.z0);
  out += ',';
  out += std::to_string(r.n);
  out += ',';
  if (r.n2_over_n1) out += format_double(*r.n2_over_n1);
  out += ',';
  if (with_trial) {
    out += std::to_string(r.trial);
    out += ',';
  }
  out += std::to_string(r.seed);
  out += ',';
  out += r.metric;
  out += ',';
  out += format_double(r.value);
  out += '\n';
}

bool is_corner(const Placement& p, const Arena& a) {
  return (p.x == 0.0 || p.x == a.width()) && (p.y == 0.0 || p.y == a.height());
}

// Mean over rows matching (mechanism, metric); rows are appended in trial
// order, so aggregation order is fixed.
struct Aggregator {
  double sum = 0.0;
  long count = 0;
  void add(double v) {
    sum += v;
    ++count;
  }
  double mean() const { return count ? sum / count : 0.0; }
};

}  // namespace

std::vector<int> RatioExperimentConfig::default_n_list() {
  std::vector<int> ns;
  for (int n = 2; n <= 30; ++n) ns.push_back(n);
  ns.push_back(50);
  ns.push_back(100);
  return ns;
}

std::string ExperimentTable::csv() const {
  std::string out = kHeader;
  out += '\n';
  for (const auto& r : rows) append_row(out, r, true);
  return out;
}

std::string ExperimentTable::summary_csv() const {
  std::string out = kSummaryHeader;
  out += '\n';
  for (const auto& r : summary) append_row(out, r, false);
  return out;
}

std::uint64_t trial_stream(std::uint64_t config, int n, long trial) {
  if (n < 0 || n >= (1 << 20) || trial < 0 || trial >= (1L << 24) ||
      config >= (1ull << 20))
    throw std::invalid_argument("trial stream identifier out of range");
  return (config << 44) | (static_cast<std::uint64_t>(n) << 24) |
         static_cast<std::uint64_t>(trial);
}

Profile sample_profile(const Arena& arena, const Sampler& x_sampler,
                       const Sampler& y_sampler, const Sampler* weight_sampler,
                       int n, std::uint64_t seed, std::uint64_t stream,
                       bool assign_preferences, int adverse_count) {
  if (n < 1) throw std::invalid_argument("sample_profile: n must be >= 1");
  arena.validate();
  SplitRng rng(seed, stream);
  Profile prof;
  prof.arena = arena;
  prof.users.reserve(n);
  for (int i = 0; i < n; ++i) {
    UserReport u;
    u.x = x_sampler.draw(rng);
    u.y = y_sampler.draw(rng);
    if (weight_sampler) {
      do {
        u.w = weight_sampler->draw(rng);
      } while (!(u.w > 0.0));
    }
    if (assign_preferences)
      u.pref = i < adverse_count ? Preference::Adverse : Preference::Favorable;
    prof.users.push_back(u);
  }
  return prof;
}

ExperimentTable run_ratio_experiment(const RatioExperimentConfig& cfg) {
  ExperimentTable table;
  const Sampler sx(cfg.location, cfg.arena.width());
  const Sampler sy(cfg.location, cfg.arena.height());
  const Sampler sw(DistributionSpec::uniform01(), 1.0);
  const std::string dist = cfg.location.label();

  ExperimentRow base;
  base.experiment = "fig2";
  base.distribution = dist;
  base.alpha = cfg.arena.alpha;
  base.z0 = cfg.arena.altitude;
  base.seed = cfg.seed;

  for (int n : cfg.n_list) {
    base.n = n;
    Aggregator ratio1, ratio2, sc1, sc2, opt;
    for (long t = 0; t < cfg.trials; ++t) {
      const Profile prof = sample_profile(cfg.arena, sx, sy, &sw, n, cfg.seed,
                                          trial_stream(0, n, t));
      const double cost_median = social_cost(prof, median_mechanism(prof));
      const double cost_wmedian =
          social_cost(prof, weighted_median_mechanism(prof));
      // mechanism placements are feasible, so they cap the optimum
      const double cost_opt = std::min(opt_favorable(prof).value,
                                       std::min(cost_median, cost_wmedian));
      const double r1 = objective_ratio(cost_median, cost_opt);
      const double r2 = objective_ratio(cost_wmedian, cost_opt);
      base.trial = t;
      base.mechanism = "median";
      base.metric = "ratio";
      base.value = r1;
      table.rows.push_back(base);
      base.metric = "social_cost";
      base.value = cost_median;
      table.rows.push_back(base);
      base.mechanism = "wmedian";
      base.metric = "ratio";
      base.value = r2;
      table.rows.push_back(base);
      base.metric = "social_cost";
      base.value = cost_wmedian;
      table.rows.push_back(base);
      base.mechanism = "opt";
      base.metric = "social_cost";
      base.value = cost_opt;
      table.rows.push_back(base);
      ratio1.add(r1);
      ratio2.add(r2);
      sc1.add(cost_median);
      sc2.add(cost_wmedian);
      opt.add(cost_opt);
    }
    base.trial = -1;
    base.mechanism = "median";
    base.metric = "ratio_mean";
    base.value = ratio1.mean();
    table.summary.push_back(base);
    base.metric = "social_cost_mean";
    base.value = sc1.mean();
    table.summary.push_back(base);
    base.mechanism = "wmedian";
    base.metric = "ratio_mean";
    base.value = ratio2.mean();
    table.summary.push_back(base);
    base.metric = "social_cost_mean";
    base.value = sc2.mean();
    table.summary.push_back(base);
    base.mechanism = "opt";
    base.metric = "social_cost_mean";
    base.value = opt.mean();
    table.summary.push_back(base);
  }
  return table;
}

ExperimentTable run_corner_match_experiment(const CornerMatchConfig& cfg) {
  ExperimentTable table;
  const Sampler sx(cfg.location, cfg.arena.width());
  const Sampler sy(cfg.location, cfg.arena.height());
  const Sampler sw(DistributionSpec::uniform01(), 1.0);

  ExperimentRow base;
  base.experiment = "fig3";
  base.distribution = cfg.location.label();
  base.alpha = cfg.arena.alpha;
  base.z0 = cfg.arena.altitude;
  base.seed = cfg.seed;

  for (int n : cfg.n_list) {
    base.n = n;
    Aggregator match, su_mech, su_opt;
    for (long t = 0; t < cfg.trials; ++t) {
      const Profile prof = sample_profile(cfg.arena, sx, sy, &sw, n, cfg.seed,
                                          trial_stream(0, n, t));
      const Placement mech = weighted_corner_mechanism(prof);
      const OracleResult opt = opt_obnoxious(prof);
      const bool matched =
          mech.x == opt.placement.x && mech.y == opt.placement.y;
      const double su = social_utility_adverse(prof, mech);
      base.trial = t;
      base.mechanism = "corner-w";
      base.metric = "match";
      base.value = matched ? 1.0 : 0.0;
      table.rows.push_back(base);
      base.metric = "social_utility";
      base.value = su;
      table.rows.push_back(base);
      base.mechanism = "opt";
      base.metric = "social_utility";
      base.value = opt.value;
      table.rows.push_back(base);
      match.add(matched ? 1.0 : 0.0);
      su_mech.add(su);
      su_opt.add(opt.value);
    }
    base.trial = -1;
    base.mechanism = "corner-w";
    base.metric = "match_probability";
    base.value = match.mean();
    table.summary.push_back(base);
    base.metric = "social_utility_mean";
    base.value = su_mech.mean();
    table.summary.push_back(base);
    base.mechanism = "opt";
    base.metric = "social_utility_mean";
    base.value = su_opt.mean();
    table.summary.push_back(base);
  }
  return table;
}

ExperimentTable run_dual_convergence_experiment(const DualConvergenceConfig& cfg) {
  ExperimentTable table;
  const Sampler sx(cfg.location, cfg.arena.width());
  const Sampler sy(cfg.location, cfg.arena.height());

  ExperimentRow base;
  base.experiment = "fig4";
  base.distribution = cfg.location.label();
  base.alpha = cfg.arena.alpha;
  base.z0 = cfg.arena.altitude;
  base.seed = cfg.seed;

  for (std::size_t ri = 0; ri < cfg.n2_over_n1.size(); ++ri) {
    const double r = cfg.n2_over_n1[ri];
    if (!(r > 1.0))
      table.warnings.push_back(
          "n2/n1 = " + format_double(r) +
          " does not satisfy n2 > n1; running in exploration mode");
    base.n2_over_n1 = r;
    for (int n : cfg.n_list) {
      base.n = n;
      const int adverse = static_cast<int>(std::llround(n * r / (1.0 + r)));
      Aggregator match, su_mech, su_opt, ratio;
      for (long t = 0; t < cfg.trials; ++t) {
        const Profile prof =
            sample_profile(cfg.arena, sx, sy, nullptr, n, cfg.seed,
                           trial_stream(ri, n, t), true, adverse);
        const Placement mech = dual_majority_mechanism(prof);
        OracleResult opt = opt_dual_single(prof);
        opt.value = std::max(opt.value, social_utility_dual(prof, mech));
        const bool matched = is_corner(opt.placement, prof.arena) &&
                             mech.x == opt.placement.x &&
                             mech.y == opt.placement.y;
        const double su = social_utility_dual(prof, mech);
        const double rr = objective_ratio(opt.value, su);
        base.trial = t;
        base.mechanism = "dual-majority";
        base.metric = "match";
        base.value = matched ? 1.0 : 0.0;
        table.rows.push_back(base);
        base.metric = "social_utility";
        base.value = su;
        table.rows.push_back(base);
        base.metric = "ratio";
        base.value = rr;
        table.rows.push_back(base);
        base.mechanism = "opt";
        base.metric = "social_utility";
        base.value = opt.value;
        table.rows.push_back(base);
        match.add(matched ? 1.0 : 0.0);
        su_mech.add(su);
        su_opt.add(opt.value);
        ratio.add(rr);
      }
      base.trial = -1;
      base.mechanism = "dual-majority";
      base.metric = "match_probability";
      base.value = match.mean();
      table.summary.push_back(base);
      base.metric = "social_utility_mean";
      base.value = su_mech.mean();
      table.summary.push_back(base);
      base.metric = "ratio_mean";
      base.value = ratio.mean();
      table.summary.push_back(base);
      base.mechanism = "opt";
      base.metric = "social_utility_mean";
      base.value = su_opt.mean();
      table.summary.push_back(base);
    }
  }
  return table;
}

}  // namespace uav
