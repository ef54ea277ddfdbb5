#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "support.hpp"
#include "uav/model.hpp"
#include "uav/multi_uav.hpp"
#include "uav/oracles.hpp"

using namespace uav;

namespace {

Profile two_user_line() {
  Profile prof;
  prof.arena = {2.0, 2.0, 0.0, 2.0};
  prof.users = {{0, 0, 1, {}, {}}, {2, 0, 1, {}, {}}};
  return prof;
}

Profile obnoxious_example() {
  Profile prof;
  prof.arena = {0.5, 0.5, 0.0, 2.0};
  prof.users = {{0.2, 0.5, 1, Preference::Adverse, {}},
                {0.6, 0.5, 1, Preference::Adverse, {}}};
  return prof;
}

// Exhaustive per-domain grid over (X1, X2) for the two-UAV objective.
double two_uav_grid_value(const Profile& prof, int cells = 220) {
  double total = 0.0;
  for (bool x_domain : {true, false}) {
    const double extent =
        x_domain ? prof.arena.width() : prof.arena.height();
    const double h = extent / cells;
    double best = -1e300;
    for (int i = 0; i <= cells; ++i) {
      for (int j = 0; j <= cells; ++j) {
        const double c1 = h * i, c2 = h * j;
        double su = 0.0;
        for (const auto& u : prof.users) {
          const double coord = x_domain ? u.x : u.y;
          const Preference p1 = u.prefs->toward_first;
          const Preference p2 = u.prefs->toward_second;
          const double d1 = c1 - coord, d2 = c2 - coord;
          su += p1 == Preference::Favorable ? extent * extent - d1 * d1 : d1 * d1;
          su += p2 == Preference::Favorable ? extent * extent - d2 * d2 : d2 * d2;
        }
        best = std::max(best, su);
      }
    }
    total += best;
  }
  return total;
}

}  // namespace

TEST_CASE("favorable optimum: weighted mean at alpha 2") {
  Profile prof = two_user_line();
  const OracleResult r = opt_favorable(prof);
  CHECK(r.placement.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.method == OracleMethod::ClosedForm);
  CHECK(r.value == doctest::Approx(social_cost(prof, r.placement)).epsilon(1e-12));
  CHECK(r.stationarity_norm <= 1e-6);

  // the reported mean moves when user 2 overreports
  prof.users[1].x = 4.0;
  CHECK(opt_favorable(prof).placement.x == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("favorable optimum: convex search for alpha above 2") {
  Profile prof = two_user_line();
  prof.arena.alpha = 4.0;
  const OracleResult r = opt_favorable(prof);
  CHECK(r.method == OracleMethod::ConvexSearch);
  // position accuracy is curvature-limited to ~sqrt(eps); the value is tight
  CHECK(r.placement.x == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(r.stationarity_norm <= 1e-6);

  SplitRng rng(23);
  for (double alpha : {3.0, 4.0, 6.0}) {
    uav::testing::ProfileOptions opt;
    opt.alpha = alpha;
    opt.max_n = 12;
    opt.desk_scale = true;
    const Profile rnd = uav::testing::random_profile(Game::Favorable, rng, opt);
    const OracleResult res = opt_favorable(rnd);
    CHECK(res.stationarity_norm <= 1e-6);
    // no random placement beats the search result
    for (int i = 0; i < 200; ++i) {
      const Placement p{rng.uniform(0, rnd.arena.width()),
                        rng.uniform(0, rnd.arena.height()), rnd.arena.altitude};
      CHECK(social_cost(rnd, p) >= res.value * (1 - 1e-9));
    }
  }
}

TEST_CASE("obnoxious optimum: corners, rule agreement and the misreport flip") {
  Profile prof = obnoxious_example();
  const OracleResult r = opt_obnoxious(prof);
  CHECK(r.placement.x == 1.0);
  CHECK(r.placement.y == 0.0);
  CHECK(r.method == OracleMethod::CornerEnumeration);

  // user 2 misreports x to 1, dragging the corner to x=0 and gaining utility
  const double before = utility_adverse(r.placement, prof.users[1], prof.arena);
  CHECK(before == doctest::Approx(0.41).epsilon(1e-12));
  Profile misreported = prof;
  misreported.users[1].x = 1.0;
  const OracleResult r2 = opt_obnoxious(misreported);
  CHECK(r2.placement.x == 0.0);
  const double after = utility_adverse(r2.placement, prof.users[1], prof.arena);
  CHECK(after == doctest::Approx(0.61).epsilon(1e-12));
  CHECK(after > before);

  // all users on one corner push the UAV to the opposite corner
  Profile cornered;
  cornered.arena = {0.5, 0.5, 0.0, 2.0};
  cornered.users = {{0, 0, 1, {}, {}}, {0, 0, 2, {}, {}}};
  const OracleResult r3 = opt_obnoxious(cornered);
  CHECK(r3.placement.x == 1.0);
  CHECK(r3.placement.y == 1.0);
}

TEST_CASE("obnoxious optimum matches the corner rule on random profiles") {
  SplitRng rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    uav::testing::ProfileOptions opt;
    opt.alpha = 2.0;
    const Profile prof = uav::testing::random_profile(Game::Obnoxious, rng, opt);
    const OracleResult r = opt_obnoxious(prof);
    const Placement rule = obnoxious_corner_rule(prof);
    CHECK(r.placement.x == rule.x);
    CHECK(r.placement.y == rule.y);
  }
}

TEST_CASE("dual optimum: reductions and the grid cross-check") {
  // all adverse: equals the obnoxious optimum
  Profile adverse = obnoxious_example();
  const OracleResult dual = opt_dual_single(adverse);
  const OracleResult obn = opt_obnoxious(adverse);
  CHECK(dual.placement == obn.placement);
  CHECK(dual.value == doctest::Approx(obn.value).epsilon(1e-12));

  // all favorable at alpha 2: interior maximum at the coordinate means
  Profile favorable;
  favorable.arena = {0.5, 0.5, 0.0, 2.0};
  favorable.users = {{0.2, 0.4, 1, Preference::Favorable, {}},
                     {0.6, 0.8, 1, Preference::Favorable, {}}};
  const OracleResult fav = opt_dual_single(favorable);
  CHECK(fav.placement.x == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(fav.placement.y == doctest::Approx(0.6).epsilon(1e-12));

  // one favorable plus one adverse at the same point: linear, corner optimum
  Profile mixed;
  mixed.arena = {0.5, 0.5, 0.0, 2.0};
  mixed.users = {{0.3, 0.3, 1, Preference::Favorable, {}},
                 {0.3, 0.3, 1, Preference::Adverse, {}}};
  const OracleResult m = opt_dual_single(mixed);
  CHECK((m.placement.x == 0.0 || m.placement.x == 1.0));
  const OracleResult grid = grid_search(
      [&](double x, double y) {
        return social_utility_dual(mixed, {x, y, 0.0});
      },
      mixed.arena, {}, true);
  CHECK(m.value >= grid.value * (1 - 1e-9));

  SplitRng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    uav::testing::ProfileOptions opt;
    opt.alpha = 2.0;
    opt.max_n = 8;
    const Profile prof = uav::testing::random_profile(Game::DualSingle, rng, opt);
    const OracleResult analytic = opt_dual_single(prof);
    const OracleResult searched = grid_search(
        [&](double x, double y) {
          return social_utility_dual(prof, {x, y, prof.arena.altitude});
        },
        prof.arena, {}, true);
    CHECK(analytic.value >= searched.value * (1 - 1e-9));
  }
}

TEST_CASE("two-UAV optimum against a fine grid") {
  SplitRng rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    uav::testing::ProfileOptions opt;
    opt.max_n = 6;
    opt.z0_fraction = 0.0;
    Profile prof = uav::testing::random_profile(Game::TwoUavDual, rng, opt);
    // square arena keeps the reference grid affordable
    prof.arena.half_height = prof.arena.half_width;
    for (auto& u : prof.users) u.y *= prof.arena.height() / 4.0;
    const MultiOracleResult r = opt_two_uav(prof);
    const double grid_value = two_uav_grid_value(prof);
    CHECK(r.value >= grid_value * (1 - 1e-9) - 1e-9);
    CHECK(r.value ==
          doctest::Approx(social_utility_two_uav(prof, r.placements)).epsilon(1e-12));
    CHECK(r.value >= social_utility_two_uav(prof, two_uav_dual_mechanism(prof)) *
                         (1 - 1e-12) - 1e-12);
  }
}

TEST_CASE("k-obnoxious optimum: separable corner formula") {
  Profile prof;
  prof.arena = {0.5, 0.5, 0.0, 2.0};
  prof.users = {{0.2, 0.0, 1, {}, {}}, {0.6, 0.0, 1, {}, {}}};
  const MultiOracleResult r = opt_k_obnoxious(prof, 2);
  // OPT_x = 2 * max(0.40, 0.80) = 1.6 at x = 2A; OPT_y = 2 * max(0, 2) at y = 2B
  CHECK(r.placements.placements[0].x == 1.0);
  CHECK(r.placements.placements[0].y == 1.0);
  CHECK(r.value == doctest::Approx(1.6 + 4.0).epsilon(1e-12));
  const double mech_su = social_utility_multi_adverse(
      prof, k_obnoxious_endpoints(2, prof.arena));
  CHECK(mech_su == doctest::Approx(3.2).epsilon(1e-12));
  CHECK(r.value / mech_su <= 2.0);  // x-domain alone: 1.6 / 1.2 = 4/3

  // k = 1 reduces to the obnoxious corner optimum
  const MultiOracleResult one = opt_k_obnoxious(prof, 1);
  const OracleResult single = opt_obnoxious(prof);
  CHECK(one.placements.placements[0].x == single.placement.x);
  CHECK(one.placements.placements[0].y == single.placement.y);
  CHECK(one.value == doctest::Approx(single.value).epsilon(1e-12));

  // all users at x = 0: OPT_x = k * sum w (2A)^2
  Profile at_zero;
  at_zero.arena = {0.5, 0.5, 0.0, 2.0};
  at_zero.users = {{0, 0.5, 2, {}, {}}, {0, 0.5, 1, {}, {}}};
  const MultiOracleResult r0 = opt_k_obnoxious(at_zero, 3);
  CHECK(r0.placements.placements[0].x == 1.0);

  // per-UAV corner enumeration gives the same value
  SplitRng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    uav::testing::ProfileOptions opt;
    opt.alpha = 2.0;
    opt.z0_fraction = 0.0;
    const Profile rnd = uav::testing::random_profile(Game::Obnoxious, rng, opt);
    const int k = 1 + static_cast<int>(rng.next_u64() % 5);
    const MultiOracleResult fast = opt_k_obnoxious(rnd, k);
    double best_corner = 0.0;
    for (double cx : {0.0, rnd.arena.width()})
      for (double cy : {0.0, rnd.arena.height()}) {
        MultiPlacement all;
        all.placements.assign(k, {cx, cy, 0.0});
        best_corner = std::max(best_corner,
                               social_utility_multi_adverse(rnd, all));
      }
    CHECK(fast.value == doctest::Approx(best_corner).epsilon(1e-12));
  }
}

TEST_CASE("grid search basics") {
  const Arena a{0.5, 0.5, 0.0, 2.0};
  const OracleResult flat =
      grid_search([](double, double) { return 2.5; }, a, {.resolution = 10}, true);
  CHECK(flat.value == 2.5);

  // recovers a known quadratic vertex within the final lattice step
  const OracleResult vertex = grid_search(
      [](double x, double y) {
        return (x - 0.37) * (x - 0.37) + (y - 0.81) * (y - 0.81);
      },
      a, {}, false);
  const double final_step = 1.0 / 400.0 / 1000.0;
  CHECK(std::abs(vertex.placement.x - 0.37) <= 2 * 400 * final_step);
  CHECK(std::abs(vertex.placement.y - 0.81) <= 2 * 400 * final_step);

  // agrees with the closed-form favorable optimum at alpha 2
  Profile prof;
  prof.arena = a;
  prof.users = {{0.1, 0.9, 1, {}, {}}, {0.5, 0.3, 3, {}, {}}};
  const OracleResult closed = opt_favorable(prof);
  const OracleResult searched = grid_search(
      [&](double x, double y) { return social_cost(prof, {x, y, 0.0}); }, a, {},
      false);
  CHECK(searched.value >= closed.value * (1 - 1e-12));
  CHECK(searched.value <= closed.value * (1 + kSearchValueTolerance));

  CHECK_THROWS_AS(grid_search([](double, double) { return 0.0; }, a,
                              {.resolution = 1}, false),
                  std::invalid_argument);
}

TEST_CASE("oracle values are never beaten by random placements") {
  SplitRng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    uav::testing::ProfileOptions opt;
    opt.alpha = 2.0;
    const Profile fav = uav::testing::random_profile(Game::Favorable, rng, opt);
    const OracleResult best_cost = opt_favorable(fav);
    const Profile obn = uav::testing::random_profile(Game::Obnoxious, rng, opt);
    const OracleResult best_su = opt_obnoxious(obn);
    for (int i = 0; i < 100; ++i) {
      const Placement p{rng.uniform(0, fav.arena.width()),
                        rng.uniform(0, fav.arena.height()), fav.arena.altitude};
      CHECK(social_cost(fav, p) >= best_cost.value * (1 - 1e-12));
      const Placement q{rng.uniform(0, obn.arena.width()),
                        rng.uniform(0, obn.arena.height()), obn.arena.altitude};
      CHECK(social_utility_adverse(obn, q) <= best_su.value * (1 + 1e-12));
    }
  }
}
