#include "uav/mechanisms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace uav {

namespace {

void require_nonempty(const Profile& prof) {
  if (prof.users.empty())
    throw std::invalid_argument("mechanism: empty profile");
}

// Lower median: the ((n+1)/2)-th smallest for odd n, (n/2)-th for even n.
double lower_median(std::vector<double> values) {
  const std::size_t idx = (values.size() - 1) / 2;
  std::nth_element(values.begin(), values.begin() + idx, values.end());
  return values[idx];
}

double weighted_median_1d(const Profile& prof, bool x_domain) {
  const std::size_t n = prof.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const double a = x_domain ? prof.users[i].x : prof.users[i].y;
    const double b = x_domain ? prof.users[j].x : prof.users[j].y;
    return a < b;
  });

  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;)
    suffix[i] = suffix[i + 1] + prof.users[order[i]].w;

  double prefix = 0.0;
  for (std::size_t q = 0; q < n; ++q) {
    const double below = prefix;  // sum over i < q
    prefix += prof.users[order[q]].w;
    if (prefix >= suffix[q + 1]) {
      if (!(below < suffix[q]))
        throw std::logic_error("weighted median: selection index not unique");
      return x_domain ? prof.users[order[q]].x : prof.users[order[q]].y;
    }
  }
  throw std::logic_error("weighted median: no index satisfied the conditions");
}

double corner_1d(const Profile& prof, bool x_domain, bool weighted) {
  const double half = x_domain ? prof.arena.half_width : prof.arena.half_height;
  double low = 0.0, high = 0.0;
  for (const auto& u : prof.users) {
    const double c = x_domain ? u.x : u.y;
    const double v = weighted ? u.w : 1.0;
    (c < half ? low : high) += v;
  }
  return low <= high ? 0.0 : 2.0 * half;
}

double dual_majority_1d(const Profile& prof, bool x_domain) {
  const double half = x_domain ? prof.arena.half_width : prof.arena.half_height;
  std::size_t toward_high = 0;  // |R1| + |L2|
  std::size_t toward_low = 0;   // |R2| + |L1|
  for (const auto& u : prof.users) {
    const double c = x_domain ? u.x : u.y;
    if (*u.pref == Preference::Favorable)
      (c >= half ? toward_high : toward_low) += 1;
    else
      (c <= half ? toward_high : toward_low) += 1;
  }
  return toward_high >= toward_low ? 2.0 * half : 0.0;
}

}  // namespace

const char* mechanism_kind_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::Median: return "median";
    case MechanismKind::WeightedMedian: return "wmedian";
    case MechanismKind::WeightedCorner: return "corner-w";
    case MechanismKind::UnweightedCorner: return "corner-u";
    case MechanismKind::DualMajority: return "dual-majority";
  }
  throw std::invalid_argument("unknown mechanism kind");
}

Placement run_mechanism(MechanismKind kind, const Profile& prof) {
  switch (kind) {
    case MechanismKind::Median: return median_mechanism(prof);
    case MechanismKind::WeightedMedian: return weighted_median_mechanism(prof);
    case MechanismKind::WeightedCorner: return weighted_corner_mechanism(prof);
    case MechanismKind::UnweightedCorner: return unweighted_corner_mechanism(prof);
    case MechanismKind::DualMajority: return dual_majority_mechanism(prof);
  }
  throw std::invalid_argument("unknown mechanism kind");
}

Placement median_mechanism(const Profile& prof) {
  require_nonempty(prof);
  std::vector<double> xs, ys;
  xs.reserve(prof.size());
  ys.reserve(prof.size());
  for (const auto& u : prof.users) {
    xs.push_back(u.x);
    ys.push_back(u.y);
  }
  return {lower_median(std::move(xs)), lower_median(std::move(ys)),
          prof.arena.altitude};
}

Placement weighted_median_mechanism(const Profile& prof) {
  require_nonempty(prof);
  return {weighted_median_1d(prof, true), weighted_median_1d(prof, false),
          prof.arena.altitude};
}

Placement weighted_corner_mechanism(const Profile& prof) {
  require_nonempty(prof);
  return {corner_1d(prof, true, true), corner_1d(prof, false, true),
          prof.arena.altitude};
}

Placement unweighted_corner_mechanism(const Profile& prof) {
  require_nonempty(prof);
  return {corner_1d(prof, true, false), corner_1d(prof, false, false),
          prof.arena.altitude};
}

Placement dual_majority_mechanism(const Profile& prof) {
  require_nonempty(prof);
  if (!prof.unit_weights())
    throw std::invalid_argument("dual majority: weights must all be 1");
  for (const auto& u : prof.users)
    if (!u.pref)
      throw std::invalid_argument("dual majority: every user needs a preference");
  return {dual_majority_1d(prof, true), dual_majority_1d(prof, false),
          prof.arena.altitude};
}

}  // namespace uav
