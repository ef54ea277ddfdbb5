#include "uav/model.hpp"

#include <cmath>
#include <stdexcept>

namespace uav {

namespace {

void require_in_arena(double x, double y, const Arena& a, const char* what) {
  if (!a.contains(x, y)) throw std::domain_error(std::string(what) + " outside the arena");
}

double ground_sq(const Placement& p, const UserReport& u) {
  const double dx = u.x - p.x;
  const double dy = u.y - p.y;
  return dx * dx + dy * dy;
}

}  // namespace

double pow_half_alpha(double squared, double alpha) {
  if (alpha == 2.0) return squared;
  if (alpha == 4.0) return squared * squared;
  if (alpha == 6.0) return squared * squared * squared;
  if (alpha == 3.0) return squared * std::sqrt(squared);
  return std::pow(squared, alpha * 0.5);
}

double cost(const Placement& p, const UserReport& u, const Arena& a) {
  require_in_arena(u.x, u.y, a, "user");
  require_in_arena(p.x, p.y, a, "placement");
  return u.w * pow_half_alpha(ground_sq(p, u) + p.z * p.z, a.alpha);
}

double utility_adverse(const Placement& p, const UserReport& u, const Arena& a) {
  return cost(p, u, a);
}

double utility_dual(const Placement& p, const UserReport& u, const Arena& a) {
  if (u.w != 1.0)
    throw std::invalid_argument("dual-preference game requires unit weights");
  if (!u.pref)
    throw std::invalid_argument("dual-preference game requires a declared preference");
  require_in_arena(u.x, u.y, a, "user");
  require_in_arena(p.x, p.y, a, "placement");
  const double dx = u.x - p.x;
  const double dy = u.y - p.y;
  const double zz = p.z * p.z;
  if (*u.pref == Preference::Adverse)
    return pow_half_alpha(dx * dx + dy * dy + zz, a.alpha);
  const double shifted = a.width() * a.width() - dx * dx +
                         a.height() * a.height() - dy * dy + zz;
  return pow_half_alpha(shifted, a.alpha);
}

double utility_two_uav(const MultiPlacement& mp, const UserReport& u,
                       const Arena& a) {
  if (a.alpha != 2.0)
    throw std::invalid_argument("two-UAV game is defined for alpha = 2 only");
  if (!u.prefs)
    throw std::invalid_argument("two-UAV game requires a preference pair");
  if (mp.size() != 2)
    throw std::invalid_argument("two-UAV utility needs exactly two placements");
  require_in_arena(u.x, u.y, a, "user");
  double total = 0.0;
  const Preference toward[2] = {u.prefs->toward_first, u.prefs->toward_second};
  for (int j = 0; j < 2; ++j) {
    const Placement& p = mp.placements[j];
    require_in_arena(p.x, p.y, a, "placement");
    const double dx = p.x - u.x;
    const double dy = p.y - u.y;
    if (toward[j] == Preference::Favorable)
      total += a.width() * a.width() - dx * dx + a.height() * a.height() - dy * dy;
    else
      total += dx * dx + dy * dy + p.z * p.z;
  }
  return total;
}

double social_cost(const Profile& prof, const Placement& p) {
  double sum = 0.0;
  for (const auto& u : prof.users) sum += cost(p, u, prof.arena);
  return sum;
}

double social_utility_adverse(const Profile& prof, const Placement& p) {
  double sum = 0.0;
  for (const auto& u : prof.users) sum += utility_adverse(p, u, prof.arena);
  return sum;
}

double social_utility_dual(const Profile& prof, const Placement& p) {
  double sum = 0.0;
  for (const auto& u : prof.users) sum += utility_dual(p, u, prof.arena);
  return sum;
}

double social_utility_two_uav(const Profile& prof, const MultiPlacement& mp) {
  double sum = 0.0;
  for (const auto& u : prof.users) sum += utility_two_uav(mp, u, prof.arena);
  return sum;
}

double weight_from_link(double snr_threshold, double noise_power,
                        double ref_channel_power) {
  if (!(snr_threshold > 0.0) || !(noise_power > 0.0) || !(ref_channel_power > 0.0))
    throw std::domain_error("weight_from_link: all inputs must be positive");
  return snr_threshold * noise_power / ref_channel_power;
}

}  // namespace uav
