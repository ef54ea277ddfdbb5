#include "uav/multi_uav.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "uav/model.hpp"

namespace uav {

namespace {

// Q1..Q4 for coordinates in [0,A], Q5..Q8 for (A,2A], ordered by preference
// pair (1,1),(1,2),(2,1),(2,2).
int pair_offset(const PreferencePair& p) {
  const int a = p.toward_first == Preference::Favorable ? 0 : 1;
  const int b = p.toward_second == Preference::Favorable ? 0 : 1;
  return 2 * a + b;  // 0..3
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Smallest denominator q such that some p/q approximates w to within
// 1e-9 * max(1, w), found by the continued-fraction convergents of w.
std::int64_t denominator_of(double w, std::int64_t max_den) {
  const double tol = 1e-9 * std::max(1.0, w);
  double x = w;
  std::int64_t p_prev = 1, p_prev2 = 0;
  std::int64_t q_prev = 0, q_prev2 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_floor = std::floor(x);
    if (a_floor > static_cast<double>(max_den)) break;
    const std::int64_t a = static_cast<std::int64_t>(a_floor);
    const std::int64_t p = a * p_prev + p_prev2;
    const std::int64_t q = a * q_prev + q_prev2;
    if (q > max_den) break;
    if (std::abs(w - static_cast<double>(p) / static_cast<double>(q)) <= tol)
      return q;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    const double frac = x - a_floor;
    if (frac <= 0.0) break;
    x = 1.0 / frac;
  }
  throw std::invalid_argument(
      "percentile mechanism: weight has no rational form within the expansion cap");
}

double percentile_1d(const Profile& prof,
                     const std::vector<std::int64_t>& iw, std::int64_t total,
                     int j, int k, bool x_domain) {
  // 1-based target index into the virtual expanded multiset.
  const std::int64_t target =
      (total - 1) * static_cast<std::int64_t>(j) / static_cast<std::int64_t>(k + 1) + 1;

  std::vector<std::size_t> order(prof.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ca = x_domain ? prof.users[a].x : prof.users[a].y;
    const double cb = x_domain ? prof.users[b].x : prof.users[b].y;
    return ca < cb;
  });

  std::int64_t cumulative = 0;
  for (std::size_t i : order) {
    cumulative += iw[i];
    if (cumulative >= target)
      return x_domain ? prof.users[i].x : prof.users[i].y;
  }
  throw std::logic_error("percentile mechanism: target index beyond total weight");
}

}  // namespace

QSetCounts classify_q_sets(const Profile& prof, bool x_domain) {
  const double half = x_domain ? prof.arena.half_width : prof.arena.half_height;
  QSetCounts counts;
  for (const auto& u : prof.users) {
    if (!u.prefs)
      throw std::invalid_argument("two-UAV game requires a preference pair");
    const double c = x_domain ? u.x : u.y;
    const int base = c <= half ? 1 : 5;
    counts.q[base + pair_offset(*u.prefs)] += 1;
  }
  return counts;
}

MultiPlacement two_uav_dual_mechanism(
    const Profile& prof, std::optional<std::pair<double, double>> altitudes) {
  if (prof.users.empty())
    throw std::invalid_argument("mechanism: empty profile");
  if (prof.arena.alpha != 2.0)
    throw std::invalid_argument("two-UAV game is defined for alpha = 2 only");
  if (!prof.unit_weights())
    throw std::invalid_argument("two-UAV game requires unit weights");

  const double z1 = altitudes ? altitudes->first : prof.arena.altitude;
  const double z2 = altitudes ? altitudes->second : prof.arena.altitude;

  MultiPlacement mp;
  mp.placements.resize(2);
  for (bool x_domain : {true, false}) {
    const QSetCounts q = classify_q_sets(prof, x_domain);
    const double extent =
        x_domain ? prof.arena.width() : prof.arena.height();
    const bool first_low = q[2] + q[7] >= q[3] + q[6];
    const double c1 = first_low ? 0.0 : extent;
    const double c2 = first_low ? extent : 0.0;
    if (x_domain) {
      mp.placements[0].x = c1;
      mp.placements[1].x = c2;
    } else {
      mp.placements[0].y = c1;
      mp.placements[1].y = c2;
    }
  }
  mp.placements[0].z = z1;
  mp.placements[1].z = z2;
  return mp;
}

MultiPlacement k_obnoxious_endpoints(int k, const Arena& a,
                                     const std::vector<double>& altitudes) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!altitudes.empty() && altitudes.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("altitude list must have one entry per UAV");
  const int at_origin = (k % 2 == 0) ? k / 2 : (k + 1) / 2;
  MultiPlacement mp;
  mp.placements.reserve(k);
  for (int j = 0; j < k; ++j) {
    const double z = altitudes.empty() ? a.altitude : altitudes[j];
    if (j < at_origin)
      mp.placements.push_back({0.0, 0.0, z});
    else
      mp.placements.push_back({a.width(), a.height(), z});
  }
  return mp;
}

std::vector<std::int64_t> rescale_weights_to_integers(
    const std::vector<double>& weights, std::int64_t max_units) {
  std::int64_t lcd = 1;
  for (double w : weights) {
    if (!(w > 0.0))
      throw std::invalid_argument("weights must be positive");
    const std::int64_t d = denominator_of(w, max_units);
    lcd = lcd / gcd64(lcd, d) * d;
    if (lcd > max_units)
      throw std::invalid_argument(
          "percentile mechanism: common denominator exceeds the expansion cap");
  }
  std::vector<std::int64_t> scaled;
  scaled.reserve(weights.size());
  std::int64_t total = 0;
  std::int64_t common = 0;
  for (double w : weights) {
    const std::int64_t v = std::llround(w * static_cast<double>(lcd));
    if (v < 1) throw std::logic_error("weight rescaling produced a zero unit count");
    total += v;
    if (total > max_units)
      throw std::invalid_argument(
          "percentile mechanism: expanded weight multiset exceeds the cap");
    common = gcd64(common == 0 ? v : common, v);
    scaled.push_back(v);
  }
  // Canonical form: selections depend only on weight ratios.
  if (common > 1)
    for (auto& v : scaled) v /= common;
  return scaled;
}

MultiPlacement percentile_mechanism(const Profile& prof, int k) {
  if (prof.users.empty())
    throw std::invalid_argument("mechanism: empty profile");
  if (k < 1) throw std::invalid_argument("k must be at least 1");

  std::vector<double> weights;
  weights.reserve(prof.size());
  for (const auto& u : prof.users) weights.push_back(u.w);
  const std::vector<std::int64_t> iw = rescale_weights_to_integers(weights);
  const std::int64_t total = std::accumulate(iw.begin(), iw.end(), std::int64_t{0});

  MultiPlacement mp;
  mp.placements.reserve(k);
  for (int j = 1; j <= k; ++j) {
    Placement p;
    p.x = percentile_1d(prof, iw, total, j, k, true);
    p.y = percentile_1d(prof, iw, total, j, k, false);
    p.z = prof.arena.altitude;
    mp.placements.push_back(p);
  }
  return mp;
}

double min_service_cost(const MultiPlacement& mp, const UserReport& u,
                        const Arena& a) {
  if (mp.placements.empty())
    throw std::invalid_argument("service cost needs at least one UAV");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : mp.placements) best = std::min(best, cost(p, u, a));
  return best;
}

double multi_adverse_utility(const MultiPlacement& mp, const UserReport& u,
                             const Arena& a) {
  double sum = 0.0;
  for (const auto& p : mp.placements) sum += utility_adverse(p, u, a);
  return sum;
}

double social_min_service_cost(const Profile& prof, const MultiPlacement& mp) {
  double sum = 0.0;
  for (const auto& u : prof.users) sum += min_service_cost(mp, u, prof.arena);
  return sum;
}

double social_utility_multi_adverse(const Profile& prof,
                                    const MultiPlacement& mp) {
  double sum = 0.0;
  for (const auto& u : prof.users) sum += multi_adverse_utility(mp, u, prof.arena);
  return sum;
}

}  // namespace uav
