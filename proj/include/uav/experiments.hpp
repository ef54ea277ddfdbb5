// Seeded Monte Carlo harness: profile sampling and the three convergence
// experiment suites, emitting deterministic CSV tables.
#ifndef UAV_EXPERIMENTS_HPP
#define UAV_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uav/core.hpp"
#include "uav/distributions.hpp"

namespace uav {

// One (trial, metric) record. Summary rows reuse the layout with the trial
// column dropped and aggregate metric names (*_mean, match_probability).
struct ExperimentRow {
  std::string experiment;
  std::string mechanism;
  std::string distribution;
  double alpha = 2.0;
  double z0 = 0.0;
  int n = 0;
  std::optional<double> n2_over_n1;
  long trial = -1;  // -1 in summary rows
  std::uint64_t seed = 0;
  std::string metric;
  double value = 0.0;
};

struct ExperimentTable {
  std::vector<ExperimentRow> rows;
  std::vector<ExperimentRow> summary;
  std::vector<std::string> warnings;

  std::string csv() const;          // per-trial table, includes the trial column
  std::string summary_csv() const;  // aggregate table, no trial column
};

// Substream identifier for (configuration, n, trial); bit layout documented
// so subsets of trials reproduce independently of execution order.
std::uint64_t trial_stream(std::uint64_t config, int n, long trial);

// Draws n users i.i.d. (x, y, then weight) from the samplers on the
// substream (seed, trial_stream(config, n, trial)). Null weight sampler
// means unit weights. adverse_count users at the head of the list are
// marked Adverse and the rest Favorable when assign_preferences is set.
Profile sample_profile(const Arena& arena, const Sampler& x_sampler,
                       const Sampler& y_sampler, const Sampler* weight_sampler,
                       int n, std::uint64_t seed, std::uint64_t stream,
                       bool assign_preferences = false, int adverse_count = 0);

// Favorable-game convergence: median and weighted median social costs and
// their ratios against the closed-form optimum at alpha = 2.
struct RatioExperimentConfig {
  std::vector<int> n_list = default_n_list();
  int trials = 1000;
  DistributionSpec location = DistributionSpec::uniform01();
  Arena arena{0.5, 0.5, 0.2, 2.0};
  std::uint64_t seed = 1;

  static std::vector<int> default_n_list();
};
ExperimentTable run_ratio_experiment(const RatioExperimentConfig& cfg);

// Obnoxious-game convergence: probability that the weighted corner rule
// picks the socially optimal corner.
struct CornerMatchConfig {
  std::vector<int> n_list = {5, 10, 20, 50, 100, 200};
  int trials = 2000;
  DistributionSpec location = DistributionSpec::beta(2.0, 5.0);
  Arena arena{0.5, 0.5, 0.0, 2.0};
  std::uint64_t seed = 1;
};
ExperimentTable run_corner_match_experiment(const CornerMatchConfig& cfg);

// Dual-preference convergence at one or more n2/n1 mixes; adverse counts
// are round(n * r / (1 + r)).
struct DualConvergenceConfig {
  std::vector<int> n_list = {5, 10, 20, 50, 100, 200};
  int trials = 2000;
  DistributionSpec location = DistributionSpec::beta(2.0, 5.0);
  std::vector<double> n2_over_n1 = {1.5, 4.0};
  Arena arena{0.5, 0.5, 0.0, 2.0};
  std::uint64_t seed = 1;
};
ExperimentTable run_dual_convergence_experiment(const DualConvergenceConfig& cfg);

}  // namespace uav

#endif
