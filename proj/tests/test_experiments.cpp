#include <doctest.h>

#include <cmath>

#include "uav/experiments.hpp"
#include "uav/mechanisms.hpp"
#include "uav/model.hpp"
#include "uav/oracles.hpp"

using namespace uav;

TEST_CASE("sampled profiles honor the arena and weight invariants") {
  const Arena arena{0.5, 0.5, 0.2, 2.0};
  const Sampler sx(DistributionSpec::beta(2, 3), arena.width());
  const Sampler sy(DistributionSpec::uniform01(), arena.height());
  const Sampler sw(DistributionSpec::uniform01(), 1.0);
  for (long t = 0; t < 50; ++t) {
    const Profile prof =
        sample_profile(arena, sx, sy, &sw, 12, 9, trial_stream(0, 12, t));
    CHECK_NOTHROW(prof.validate());
    // head-of-list preference assignment for the dual game
    const Profile dual =
        sample_profile(arena, sx, sy, nullptr, 10, 9, trial_stream(1, 10, t),
                       true, 6);
    int adverse = 0;
    for (const auto& u : dual.users) {
      REQUIRE(u.pref.has_value());
      if (*u.pref == Preference::Adverse) ++adverse;
      CHECK(u.w == 1.0);
    }
    CHECK(adverse == 6);
  }
  CHECK(sample_profile(arena, sx, sy, nullptr, 1, 1, 0).size() == 1);
  CHECK_THROWS_AS(sample_profile(arena, sx, sy, nullptr, 0, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("identical seeds give byte-identical CSV output") {
  RatioExperimentConfig cfg;
  cfg.n_list = {2, 3, 5};
  cfg.trials = 40;
  cfg.seed = 77;
  const ExperimentTable a = run_ratio_experiment(cfg);
  const ExperimentTable b = run_ratio_experiment(cfg);
  CHECK(a.csv() == b.csv());
  CHECK(a.summary_csv() == b.summary_csv());
  CHECK(a.csv().substr(0, a.csv().find('\n')) ==
        "experiment,mechanism,distribution,alpha,z0,n,n2_over_n1,trial,seed,"
        "metric,value");

  CornerMatchConfig cm;
  cm.n_list = {5, 20};
  cm.trials = 60;
  CHECK(run_corner_match_experiment(cm).csv() ==
        run_corner_match_experiment(cm).csv());

  DualConvergenceConfig dc;
  dc.n_list = {5, 20};
  dc.trials = 60;
  CHECK(run_dual_convergence_experiment(dc).csv() ==
        run_dual_convergence_experiment(dc).csv());
}

TEST_CASE("every ratio trial is at least 1 and z0=0 single-user ratios are 1") {
  RatioExperimentConfig cfg;
  cfg.n_list = {1, 2, 7};
  cfg.trials = 200;
  cfg.arena.altitude = 0.0;
  const ExperimentTable table = run_ratio_experiment(cfg);
  for (const auto& row : table.rows)
    if (row.metric == "ratio") {
      CHECK(row.value >= 1.0 - 1e-9);
      if (row.n == 1) CHECK(row.value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("degenerate location spec pins the corner match probability at 1") {
  CornerMatchConfig cfg;
  cfg.n_list = {5, 50};
  cfg.trials = 100;
  // essentially all mass below the midline in both domains
  cfg.location = DistributionSpec::truncated_normal(0.25, 0.02);
  const ExperimentTable table = run_corner_match_experiment(cfg);
  for (const auto& row : table.summary)
    if (row.metric == "match_probability") CHECK(row.value == 1.0);
}

TEST_CASE("all-adverse dual profiles reduce to the obnoxious game") {
  const Arena arena{0.5, 0.5, 0.0, 2.0};
  const Sampler s(DistributionSpec::beta(2, 3), 1.0);
  for (long t = 0; t < 40; ++t) {
    Profile prof =
        sample_profile(arena, s, s, nullptr, 9, 13, trial_stream(0, 9, t), true, 9);
    const OracleResult dual = opt_dual_single(prof);
    const OracleResult obn = opt_obnoxious(prof);
    CHECK(dual.value == doctest::Approx(obn.value).epsilon(1e-12));
    CHECK(dual.placement == obn.placement);
  }
}

TEST_CASE("dual convergence experiment warns on non-dominant mixes") {
  DualConvergenceConfig cfg;
  cfg.n_list = {4};
  cfg.trials = 5;
  cfg.n2_over_n1 = {0.5};
  const ExperimentTable table = run_dual_convergence_experiment(cfg);
  CHECK(table.warnings.size() == 1);
  CHECK(!table.rows.empty());
}

TEST_CASE("summary table drops the trial column") {
  CornerMatchConfig cfg;
  cfg.n_list = {5};
  cfg.trials = 10;
  const ExperimentTable table = run_corner_match_experiment(cfg);
  CHECK(table.summary_csv().substr(0, table.summary_csv().find('\n')) ==
        "experiment,mechanism,distribution,alpha,z0,n,n2_over_n1,seed,metric,"
        "value");
  for (const auto& row : table.summary) CHECK(row.trial == -1);
}
