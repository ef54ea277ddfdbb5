// Shared random-profile generators for the unit and acceptance suites.
#ifndef UAV_TESTS_SUPPORT_HPP
#define UAV_TESTS_SUPPORT_HPP

#include "uav/core.hpp"
#include "uav/rng.hpp"
#include "uav/verification.hpp"

namespace uav::testing {

struct ProfileOptions {
  int max_n = 20;
  bool integer_weights = false;  // weights drawn from {1..5} instead of (0.1, 5]
  double alpha = -1.0;           // <0: draw from {2, 3, 4, 6}
  double z0_fraction = -1.0;     // z0 = fraction * A; <0: draw from {0, 0.2}
  bool desk_scale = false;       // unit arena [0,1]^2 and weights in (0.1, 1]
};

inline Profile random_profile(Game game, SplitRng& rng,
                              const ProfileOptions& opt = {}) {
  Profile prof;
  prof.arena.half_width = opt.desk_scale ? 0.5 : rng.uniform(0.25, 2.0);
  prof.arena.half_height = opt.desk_scale ? 0.5 : rng.uniform(0.25, 2.0);

  static const double kAlphas[4] = {2.0, 3.0, 4.0, 6.0};
  const bool alpha2_only = game == Game::TwoUavDual;
  if (opt.alpha >= 0.0)
    prof.arena.alpha = opt.alpha;
  else
    prof.arena.alpha = alpha2_only ? 2.0 : kAlphas[rng.next_u64() % 4];

  const double z0_fraction =
      opt.z0_fraction >= 0.0 ? opt.z0_fraction : (rng.next_u64() & 1 ? 0.2 : 0.0);
  prof.arena.altitude = z0_fraction * prof.arena.half_width;

  const bool unit_weights =
      game == Game::DualSingle || game == Game::TwoUavDual;
  const int n = 1 + static_cast<int>(rng.next_u64() % opt.max_n);
  for (int i = 0; i < n; ++i) {
    UserReport u;
    u.x = rng.uniform(0.0, prof.arena.width());
    u.y = rng.uniform(0.0, prof.arena.height());
    if (unit_weights)
      u.w = 1.0;
    else if (opt.integer_weights)
      u.w = static_cast<double>(1 + rng.next_u64() % 5);
    else
      u.w = rng.uniform(0.1, opt.desk_scale ? 1.0 : 5.0);
    if (game == Game::DualSingle)
      u.pref = rng.next_u64() & 1 ? Preference::Adverse : Preference::Favorable;
    if (game == Game::TwoUavDual)
      u.prefs = PreferencePair{
          rng.next_u64() & 1 ? Preference::Adverse : Preference::Favorable,
          rng.next_u64() & 1 ? Preference::Adverse : Preference::Favorable};
    prof.users.push_back(u);
  }
  return prof;
}

}  // namespace uav::testing

#endif
