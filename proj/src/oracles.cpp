#include "uav/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "uav/model.hpp"
#include "uav/multi_uav.hpp"

namespace uav {

namespace {

// Objective evaluation without arena membership checks, so finite-difference
// probes may step just outside the boundary.
double social_cost_raw(const Profile& prof, double x, double y, double z) {
  double sum = 0.0;
  for (const auto& u : prof.users) {
    const double dx = u.x - x;
    const double dy = u.y - y;
    sum += u.w * pow_half_alpha(dx * dx + dy * dy + z * z, prof.arena.alpha);
  }
  return sum;
}

double weighted_mean(const Profile& prof, bool x_domain) {
  double num = 0.0, den = 0.0;
  for (const auto& u : prof.users) {
    num += u.w * (x_domain ? u.x : u.y);
    den += u.w;
  }
  return num / den;
}

// Convex 1D minimization by ternary search over [lo, hi].
double ternary_min(const std::function<double(double)>& f, double lo, double hi) {
  const double span = hi - lo;
  while (hi - lo > 1e-13 * span) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

double fd_gradient_norm(const Profile& prof, double x, double y, double z) {
  const double hx = 1e-5 * prof.arena.half_width;
  const double hy = 1e-5 * prof.arena.half_height;
  const double gx =
      (social_cost_raw(prof, x + hx, y, z) - social_cost_raw(prof, x - hx, y, z)) /
      (2.0 * hx);
  const double gy =
      (social_cost_raw(prof, x, y + hy, z) - social_cost_raw(prof, x, y - hy, z)) /
      (2.0 * hy);
  return std::hypot(gx, gy);
}

struct DualDomainStats {
  double n1 = 0.0, n2 = 0.0;  // favorable / adverse counts
  double s1 = 0.0, s2 = 0.0;  // coordinate sums per type
};

DualDomainStats dual_stats(const Profile& prof, bool x_domain) {
  DualDomainStats st;
  for (const auto& u : prof.users) {
    const double c = x_domain ? u.x : u.y;
    if (*u.pref == Preference::Favorable) {
      st.n1 += 1.0;
      st.s1 += c;
    } else {
      st.n2 += 1.0;
      st.s2 += c;
    }
  }
  return st;
}

// Per-domain dual-preference utility at alpha = 2 (z-terms excluded; they
// are constant in the placement).
double dual_domain_value(const Profile& prof, bool x_domain, double at) {
  const double extent = x_domain ? prof.arena.width() : prof.arena.height();
  double sum = 0.0;
  for (const auto& u : prof.users) {
    const double d = (x_domain ? u.x : u.y) - at;
    if (*u.pref == Preference::Favorable)
      sum += extent * extent - d * d;
    else
      sum += d * d;
  }
  return sum;
}

// Argmax of the per-domain quadratic over {0, 2A} plus the clipped
// stationary point when the quadratic is concave; ties take the smaller
// coordinate.
double dual_domain_argmax(const Profile& prof, bool x_domain) {
  const double extent = x_domain ? prof.arena.width() : prof.arena.height();
  const DualDomainStats st = dual_stats(prof, x_domain);
  std::vector<double> candidates{0.0, extent};
  if (st.n2 < st.n1) {
    const double stationary = (st.s1 - st.s2) / (st.n1 - st.n2);
    candidates.push_back(std::clamp(stationary, 0.0, extent));
  }
  double best_at = candidates[0];
  double best = dual_domain_value(prof, x_domain, best_at);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double v = dual_domain_value(prof, x_domain, candidates[i]);
    if (v > best || (v == best && candidates[i] < best_at)) {
      best = v;
      best_at = candidates[i];
    }
  }
  return best_at;
}

// Per-domain two-UAV objective for one UAV index (0 or 1) at alpha = 2.
double two_uav_domain_value(const Profile& prof, bool x_domain, int uav,
                            double at) {
  const double extent = x_domain ? prof.arena.width() : prof.arena.height();
  double sum = 0.0;
  for (const auto& u : prof.users) {
    const double d = (x_domain ? u.x : u.y) - at;
    const Preference pref =
        uav == 0 ? u.prefs->toward_first : u.prefs->toward_second;
    if (pref == Preference::Favorable)
      sum += extent * extent - d * d;
    else
      sum += d * d;
  }
  return sum;
}

double two_uav_domain_argmax(const Profile& prof, bool x_domain, int uav) {
  const double extent = x_domain ? prof.arena.width() : prof.arena.height();
  double n1 = 0.0, n2 = 0.0, s1 = 0.0, s2 = 0.0;
  for (const auto& u : prof.users) {
    const Preference pref =
        uav == 0 ? u.prefs->toward_first : u.prefs->toward_second;
    const double c = x_domain ? u.x : u.y;
    if (pref == Preference::Favorable) {
      n1 += 1.0;
      s1 += c;
    } else {
      n2 += 1.0;
      s2 += c;
    }
  }
  std::vector<double> candidates{0.0, extent};
  if (n2 < n1) candidates.push_back(std::clamp((s1 - s2) / (n1 - n2), 0.0, extent));
  double best_at = candidates[0];
  double best = two_uav_domain_value(prof, x_domain, uav, best_at);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double v = two_uav_domain_value(prof, x_domain, uav, candidates[i]);
    if (v > best || (v == best && candidates[i] < best_at)) {
      best = v;
      best_at = candidates[i];
    }
  }
  return best_at;
}

}  // namespace

OracleResult opt_favorable(const Profile& prof) {
  prof.validate();
  const Arena& a = prof.arena;
  OracleResult res;
  if (a.alpha == 2.0) {
    res.placement = {weighted_mean(prof, true), weighted_mean(prof, false),
                     a.altitude};
    res.method = OracleMethod::ClosedForm;
  } else {
    double x = weighted_mean(prof, true);
    double y = weighted_mean(prof, false);
    double value = social_cost_raw(prof, x, y, a.altitude);
    for (int pass = 0; pass < 200; ++pass) {
      const double px = x, py = y;
      x = ternary_min([&](double t) { return social_cost_raw(prof, t, y, a.altitude); },
                      0.0, a.width());
      y = ternary_min([&](double t) { return social_cost_raw(prof, x, t, a.altitude); },
                      0.0, a.height());
      const double next = social_cost_raw(prof, x, y, a.altitude);
      const double moved = std::max(std::abs(x - px) / a.width(),
                                    std::abs(y - py) / a.height());
      if (value - next <= 1e-10 * std::abs(value) && moved <= 1e-9) {
        value = next;
        break;
      }
      value = next;
    }
    res.placement = {x, y, a.altitude};
    res.method = OracleMethod::ConvexSearch;
    res.value_tolerance = kSearchValueTolerance;
  }
  res.value = social_cost(prof, res.placement);
  res.stationarity_norm =
      fd_gradient_norm(prof, res.placement.x, res.placement.y, res.placement.z);
  return res;
}

Placement obnoxious_corner_rule(const Profile& prof) {
  prof.validate();
  const Arena& a = prof.arena;
  const double x = weighted_mean(prof, true) >= a.half_width ? 0.0 : a.width();
  const double y = weighted_mean(prof, false) >= a.half_height ? 0.0 : a.height();
  return {x, y, a.altitude};
}

OracleResult opt_obnoxious(const Profile& prof) {
  prof.validate();
  const Arena& a = prof.arena;
  const std::array<Placement, 4> corners{{{0.0, 0.0, a.altitude},
                                          {0.0, a.height(), a.altitude},
                                          {a.width(), 0.0, a.altitude},
                                          {a.width(), a.height(), a.altitude}}};
  OracleResult res;
  res.method = OracleMethod::CornerEnumeration;
  res.placement = corners[0];
  res.value = social_utility_adverse(prof, corners[0]);
  for (std::size_t i = 1; i < corners.size(); ++i) {
    const double v = social_utility_adverse(prof, corners[i]);
    if (v > res.value) {
      res.value = v;
      res.placement = corners[i];
    }
  }

  if (a.alpha == 2.0) {
    // Corner enumeration and the weighted-mean rule agree analytically;
    // verify whenever the mean is decisively away from the midline.
    const Placement rule = obnoxious_corner_rule(prof);
    const double mx = weighted_mean(prof, true);
    const double my = weighted_mean(prof, false);
    const bool x_decisive = std::abs(mx - a.half_width) > 1e-9 * a.half_width;
    const bool y_decisive = std::abs(my - a.half_height) > 1e-9 * a.half_height;
    if ((x_decisive && rule.x != res.placement.x) ||
        (y_decisive && rule.y != res.placement.y))
      throw std::logic_error("opt_obnoxious: corner rule disagrees with enumeration");
  }
  return res;
}

OracleResult opt_dual_single(const Profile& prof, const GridOptions& grid) {
  prof.validate();
  const Arena& a = prof.arena;
  for (const auto& u : prof.users)
    if (!u.pref)
      throw std::invalid_argument("dual-preference game requires declared preferences");
  if (a.alpha == 2.0) {
    OracleResult res;
    res.method = OracleMethod::ClosedForm;
    res.placement = {dual_domain_argmax(prof, true), dual_domain_argmax(prof, false),
                     a.altitude};
    res.value = social_utility_dual(prof, res.placement);
    return res;
  }
  return grid_search(
      [&](double x, double y) {
        return social_utility_dual(prof, {x, y, a.altitude});
      },
      a, grid, /*maximize=*/true);
}

MultiOracleResult opt_two_uav(const Profile& prof) {
  prof.validate();
  if (prof.arena.alpha != 2.0)
    throw std::invalid_argument("two-UAV game is defined for alpha = 2 only");
  for (const auto& u : prof.users)
    if (!u.prefs)
      throw std::invalid_argument("two-UAV game requires preference pairs");

  MultiOracleResult res;
  res.method = OracleMethod::ClosedForm;
  res.placements.placements.resize(2);
  for (int uav = 0; uav < 2; ++uav) {
    res.placements.placements[uav] = {two_uav_domain_argmax(prof, true, uav),
                                      two_uav_domain_argmax(prof, false, uav), 0.0};
  }
  res.value = social_utility_two_uav(prof, res.placements);
  return res;
}

MultiOracleResult opt_k_obnoxious(const Profile& prof, int k) {
  prof.validate();
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const Arena& a = prof.arena;

  double low_x = 0.0, high_x = 0.0, low_y = 0.0, high_y = 0.0;
  for (const auto& u : prof.users) {
    low_x += u.w * u.x * u.x;
    high_x += u.w * (u.x - a.width()) * (u.x - a.width());
    low_y += u.w * u.y * u.y;
    high_y += u.w * (u.y - a.height()) * (u.y - a.height());
  }
  // sum w (x - X)^2 is maximized at the far endpoint; ties toward 0.
  const double x = low_x >= high_x ? 0.0 : a.width();
  const double y = low_y >= high_y ? 0.0 : a.height();

  MultiOracleResult res;
  res.method = OracleMethod::ClosedForm;
  res.placements.placements.assign(static_cast<std::size_t>(k), {x, y, 0.0});
  res.value = social_utility_multi_adverse(prof, res.placements);
  return res;
}

OracleResult grid_search(const std::function<double(double, double)>& objective,
                         const Arena& a, const GridOptions& options,
                         bool maximize) {
  if (options.resolution < 2)
    throw std::invalid_argument("grid search: resolution must be at least 2");

  const double sign = maximize ? 1.0 : -1.0;
  double best = -std::numeric_limits<double>::infinity();
  double best_x = 0.0, best_y = 0.0;

  auto scan = [&](double x0, double x1, double y0, double y1, int cells) {
    const double hx = (x1 - x0) / cells;
    const double hy = (y1 - y0) / cells;
    for (int i = 0; i <= cells; ++i) {
      const double x = std::min(x0 + hx * i, x1);
      for (int j = 0; j <= cells; ++j) {
        const double y = std::min(y0 + hy * j, y1);
        const double v = sign * objective(x, y);
        if (v > best) {
          best = v;
          best_x = x;
          best_y = y;
        }
      }
    }
  };

  scan(0.0, a.width(), 0.0, a.height(), options.resolution);
  double step_x = a.width() / options.resolution;
  double step_y = a.height() / options.resolution;
  for (int pass = 0; pass < options.zoom_passes; ++pass) {
    const double x0 = std::max(0.0, best_x - step_x);
    const double x1 = std::min(a.width(), best_x + step_x);
    const double y0 = std::max(0.0, best_y - step_y);
    const double y1 = std::min(a.height(), best_y + step_y);
    scan(x0, x1, y0, y1, 20);
    step_x = (x1 - x0) / 20.0;
    step_y = (y1 - y0) / 20.0;
  }

  OracleResult res;
  res.method = OracleMethod::GridSearch;
  res.placement = {best_x, best_y, a.altitude};
  res.value = sign * best;
  res.value_tolerance = kSearchValueTolerance;
  return res;
}

}  // namespace uav
