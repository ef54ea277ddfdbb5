#include "uav/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "uav/mechanisms.hpp"
#include "uav/model.hpp"
#include "uav/multi_uav.hpp"
#include "uav/rng.hpp"

namespace uav {

namespace {

MultiPlacement wrap(Placement p) {
  MultiPlacement mp;
  mp.placements.push_back(p);
  return mp;
}

double weight_spread(const Profile& prof) {
  double wmax = prof.users.front().w, wmin = wmax;
  for (const auto& u : prof.users) {
    wmax = std::max(wmax, u.w);
    wmin = std::min(wmin, u.w);
  }
  return wmax / wmin;
}

const std::vector<PreferencePair>& all_preference_pairs() {
  static const std::vector<PreferencePair> pairs = {
      {Preference::Favorable, Preference::Favorable},
      {Preference::Favorable, Preference::Adverse},
      {Preference::Adverse, Preference::Favorable},
      {Preference::Adverse, Preference::Adverse},
  };
  return pairs;
}

// Applies one deviation to user i of `work`, runs the mechanism and records
// a report when the deviator's true objective improves by more than tol.
struct DeviationScan {
  const Mechanism& mech;
  const Profile& original;
  double tol;
  std::vector<DeviationReport>& out;

  std::size_t user = 0;
  double base_objective = 0.0;

  void probe(Profile& work, const UserReport& candidate) const {
    const UserReport& truthful = original.users[user];
    work.users[user] = candidate;
    const MultiPlacement mp = mech.run(work);
    const double val = user_objective(mech, mp, truthful, original.arena);
    const double improvement = objective_minimized(mech.game)
                                   ? base_objective - val
                                   : val - base_objective;
    if (improvement > tol)
      out.push_back({user, truthful, candidate, base_objective, val, improvement});
  }
};

}  // namespace

bool objective_minimized(Game game) {
  return game == Game::Favorable || game == Game::KFavorable;
}

double user_objective(const Mechanism& m, const MultiPlacement& mp,
                      const UserReport& truthful, const Arena& a) {
  switch (m.game) {
    case Game::Favorable:
      return cost(mp.placements.at(0), truthful, a);
    case Game::Obnoxious:
      return utility_adverse(mp.placements.at(0), truthful, a);
    case Game::DualSingle:
      return utility_dual(mp.placements.at(0), truthful, a);
    case Game::TwoUavDual:
      return utility_two_uav(mp, truthful, a);
    case Game::KObnoxious:
      return multi_adverse_utility(mp, truthful, a);
    case Game::KFavorable:
      return min_service_cost(mp, truthful, a);
  }
  throw std::logic_error("unreachable");
}

double social_objective(const Mechanism& m, const Profile& prof,
                        const MultiPlacement& mp) {
  switch (m.game) {
    case Game::Favorable:
      return social_cost(prof, mp.placements.at(0));
    case Game::Obnoxious:
      return social_utility_adverse(prof, mp.placements.at(0));
    case Game::DualSingle:
      return social_utility_dual(prof, mp.placements.at(0));
    case Game::TwoUavDual:
      return social_utility_two_uav(prof, mp);
    case Game::KObnoxious:
      return social_utility_multi_adverse(prof, mp);
    case Game::KFavorable:
      return social_min_service_cost(prof, mp);
  }
  throw std::logic_error("unreachable");
}

Mechanism make_mechanism(const std::string& name, int k) {
  Mechanism m;
  m.name = name;
  const auto single = [&m](MechanismKind kind) {
    m.run = [kind](const Profile& p) { return wrap(run_mechanism(kind, p)); };
  };
  if (name == "median") {
    m.game = Game::Favorable;
    m.weight_blind = true;
    single(MechanismKind::Median);
  } else if (name == "wmedian") {
    m.game = Game::Favorable;
    single(MechanismKind::WeightedMedian);
  } else if (name == "corner-w") {
    m.game = Game::Obnoxious;
    single(MechanismKind::WeightedCorner);
  } else if (name == "corner-u") {
    m.game = Game::Obnoxious;
    m.weight_blind = true;
    single(MechanismKind::UnweightedCorner);
  } else if (name == "dual-majority") {
    m.game = Game::DualSingle;
    single(MechanismKind::DualMajority);
  } else if (name == "two-uav-dual") {
    m.game = Game::TwoUavDual;
    m.k = 2;
    m.run = [](const Profile& p) { return two_uav_dual_mechanism(p); };
  } else if (name == "k-endpoints") {
    m.game = Game::KObnoxious;
    m.k = k;
    m.weight_blind = true;
    m.run = [k](const Profile& p) { return k_obnoxious_endpoints(k, p.arena); };
  } else if (name == "percentile") {
    m.game = Game::KFavorable;
    m.k = k;
    m.run = [k](const Profile& p) { return percentile_mechanism(p, k); };
  } else if (name == "wmean-baseline") {
    m.game = Game::Favorable;
    m.expected_strategyproof = false;
    m.run = [](const Profile& p) { return wrap(opt_favorable(p).placement); };
  } else if (name == "opt-corner-baseline") {
    m.game = Game::Obnoxious;
    m.expected_strategyproof = false;
    m.run = [](const Profile& p) { return wrap(opt_obnoxious(p).placement); };
  } else {
    throw std::invalid_argument("unknown mechanism '" + name + "'");
  }
  return m;
}

std::vector<std::string> mechanism_names() {
  return {"median",      "wmedian",     "corner-w",       "corner-u",
          "dual-majority", "two-uav-dual", "k-endpoints",    "percentile",
          "wmean-baseline", "opt-corner-baseline"};
}

std::vector<double> deviation_coordinates(const Profile& prof, bool x_domain) {
  const double half = x_domain ? prof.arena.half_width : prof.arena.half_height;
  std::vector<double> cs;
  cs.reserve(prof.size() * 2 + 5);
  for (const auto& u : prof.users) cs.push_back(x_domain ? u.x : u.y);
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  const std::size_t distinct = cs.size();
  for (std::size_t i = 0; i + 1 < distinct; ++i)
    cs.push_back(0.5 * (cs[i] + cs[i + 1]));
  cs.push_back(0.0);
  cs.push_back(half);
  cs.push_back(2.0 * half);
  cs.push_back(half * (1.0 - 1e-7));
  cs.push_back(half * (1.0 + 1e-7));
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

std::vector<DeviationReport> check_strategyproof(const Mechanism& m,
                                                 const Profile& prof,
                                                 double tol) {
  prof.validate();
  std::vector<DeviationReport> reports;
  const MultiPlacement truthful_mp = m.run(prof);
  const std::vector<double> xs = deviation_coordinates(prof, true);
  const std::vector<double> ys = deviation_coordinates(prof, false);

  Profile work = prof;
  DeviationScan scan{m, prof, tol, reports};
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const UserReport& truthful = prof.users[i];
    scan.user = i;
    scan.base_objective = user_objective(m, truthful_mp, truthful, prof.arena);
    UserReport candidate = truthful;
    for (double cx : xs) {
      for (double cy : ys) {
        candidate.x = cx;
        candidate.y = cy;
        if (m.game == Game::DualSingle) {
          for (Preference pref : {Preference::Favorable, Preference::Adverse}) {
            candidate.pref = pref;
            if (cx == truthful.x && cy == truthful.y && pref == *truthful.pref)
              continue;
            scan.probe(work, candidate);
          }
          candidate.pref = truthful.pref;
        } else if (m.game == Game::TwoUavDual) {
          for (const PreferencePair& pair : all_preference_pairs()) {
            candidate.prefs = pair;
            if (cx == truthful.x && cy == truthful.y && pair == *truthful.prefs)
              continue;
            scan.probe(work, candidate);
          }
          candidate.prefs = truthful.prefs;
        } else {
          if (cx == truthful.x && cy == truthful.y) continue;
          scan.probe(work, candidate);
        }
      }
    }
    work.users[i] = truthful;
  }
  return reports;
}

std::vector<DeviationReport> fuzz_strategyproof(const Mechanism& m,
                                                const Profile& prof,
                                                int samples_per_user,
                                                std::uint64_t seed,
                                                double tol) {
  prof.validate();
  std::vector<DeviationReport> reports;
  const MultiPlacement truthful_mp = m.run(prof);
  SplitRng rng(seed);

  Profile work = prof;
  DeviationScan scan{m, prof, tol, reports};
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const UserReport& truthful = prof.users[i];
    scan.user = i;
    scan.base_objective = user_objective(m, truthful_mp, truthful, prof.arena);
    UserReport candidate = truthful;
    for (int s = 0; s < samples_per_user; ++s) {
      candidate.x = rng.uniform(0.0, prof.arena.width());
      candidate.y = rng.uniform(0.0, prof.arena.height());
      if (m.game == Game::DualSingle)
        candidate.pref = rng.next_u64() & 1 ? Preference::Adverse
                                            : Preference::Favorable;
      else if (m.game == Game::TwoUavDual)
        candidate.prefs = all_preference_pairs()[rng.next_u64() & 3];
      scan.probe(work, candidate);
    }
    work.users[i] = truthful;
  }
  return reports;
}

double theorem_bound(const Mechanism& m, const Profile& prof, double alpha) {
  if (m.name == "median")
    return weight_spread(prof) * std::exp2((3.0 * alpha - 4.0) / 2.0);
  if (m.name == "wmedian") return std::exp2((3.0 * alpha - 4.0) / 2.0);
  if (m.name == "corner-w") return 5.0 * std::exp2((alpha - 2.0) / 2.0);
  if (m.name == "corner-u")
    return 5.0 * weight_spread(prof) * std::exp2((alpha - 2.0) / 2.0);
  if (m.name == "dual-majority") return std::exp2(3.0 * alpha / 2.0);
  if (m.name == "two-uav-dual") {
    if (alpha != 2.0)
      throw std::invalid_argument("two-UAV bound holds for alpha = 2 only");
    return 4.0;
  }
  if (m.name == "k-endpoints") {
    if (alpha != 2.0)
      throw std::invalid_argument("k-UAV bound holds for alpha = 2 only");
    return m.k % 2 == 0 ? 2.0 : 2.0 * m.k / (m.k - 1.0);
  }
  throw std::invalid_argument("no proven ratio bound for mechanism '" + m.name + "'");
}

std::vector<RatioReport> check_ratio(const Mechanism& m, const Profile& prof,
                                     const std::vector<double>& alphas,
                                     const GridOptions& grid) {
  prof.validate();
  if (prof.arena.altitude != 0.0)
    throw std::invalid_argument("ratio bounds are proven at z0 = 0; set z0 to 0");

  std::vector<RatioReport> reports;
  const std::string digest = profile_digest(prof);
  for (double alpha : alphas) {
    Profile work = prof;
    work.arena.alpha = alpha;
    work.validate();

    RatioReport r;
    r.mechanism = m.name;
    r.alpha = alpha;
    r.profile_digest = digest;
    r.bound = theorem_bound(m, work, alpha);

    const MultiPlacement mp = m.run(work);
    r.mechanism_objective = social_objective(m, work, mp);

    double oracle_rel_tol = 0.0;
    switch (m.game) {
      case Game::Favorable: {
        const OracleResult o = opt_favorable(work);
        // the mechanism placement is itself feasible, so it caps the optimum
        r.oracle_objective = std::min(o.value, r.mechanism_objective);
        r.ratio = objective_ratio(r.mechanism_objective, r.oracle_objective);
        oracle_rel_tol = o.value_tolerance;
        break;
      }
      case Game::Obnoxious: {
        const OracleResult o = opt_obnoxious(work);
        r.oracle_objective = std::max(o.value, r.mechanism_objective);
        r.ratio = objective_ratio(r.oracle_objective, r.mechanism_objective);
        break;
      }
      case Game::DualSingle: {
        const OracleResult o = opt_dual_single(work, grid);
        r.oracle_objective = std::max(o.value, r.mechanism_objective);
        r.ratio = objective_ratio(r.oracle_objective, r.mechanism_objective);
        oracle_rel_tol = o.value_tolerance;
        break;
      }
      case Game::TwoUavDual: {
        const MultiOracleResult o = opt_two_uav(work);
        r.oracle_objective = std::max(o.value, r.mechanism_objective);
        r.ratio = objective_ratio(r.oracle_objective, r.mechanism_objective);
        break;
      }
      case Game::KObnoxious: {
        const MultiOracleResult o = opt_k_obnoxious(work, m.k);
        r.oracle_objective = std::max(o.value, r.mechanism_objective);
        r.ratio = objective_ratio(r.oracle_objective, r.mechanism_objective);
        break;
      }
      case Game::KFavorable:
        throw std::invalid_argument("no proven ratio bound for mechanism '" +
                                    m.name + "'");
    }
    r.slack = 1e-9 + oracle_rel_tol;
    r.violation = r.ratio > r.bound * (1.0 + r.slack);
    reports.push_back(std::move(r));
  }
  return reports;
}

PowerInequalityReport check_power_inequalities(std::size_t samples,
                                               std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  SplitRng rng(seed);
  PowerInequalityReport rep;
  rep.samples = samples;
  rep.worst_margin_lower = std::numeric_limits<double>::infinity();
  rep.worst_margin_upper = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const double c = rng.uniform(0.0, 10.0);
    const double d = rng.uniform(0.0, 10.0);
    const double e = rng.uniform(2.0, 6.0);
    const double mid = std::pow(c + d, e);
    const double low = std::pow(c, e) + std::pow(d, e);
    const double high = std::exp2(e - 1.0) * low;
    const double scale_low = std::max({std::abs(mid), std::abs(low), 1e-300});
    const double scale_high = std::max({std::abs(mid), std::abs(high), 1e-300});
    rep.worst_margin_lower =
        std::min(rep.worst_margin_lower, (mid - low) / scale_low);
    rep.worst_margin_upper =
        std::min(rep.worst_margin_upper, (high - mid) / scale_high);
  }
  rep.pass = rep.worst_margin_lower >= -1e-9 && rep.worst_margin_upper >= -1e-9;
  return rep;
}

bool check_weight_independence(const Mechanism& m, const Profile& prof,
                               int perturbations, std::uint64_t seed) {
  if (!m.weight_blind)
    throw std::invalid_argument("mechanism '" + m.name + "' is not weight-blind");
  prof.validate();
  const MultiPlacement base = m.run(prof);
  SplitRng rng(seed);
  Profile work = prof;
  for (int p = 0; p < perturbations; ++p) {
    for (auto& u : work.users) u.w = rng.uniform(1e-3, 1e3);
    const MultiPlacement got = m.run(work);
    if (got.size() != base.size()) return false;
    for (std::size_t j = 0; j < base.size(); ++j)
      if (!(got.placements[j] == base.placements[j])) return false;
  }
  return true;
}

std::string profile_digest(const Profile& prof) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto feed = [&h](const void* data, std::size_t len) {
    const unsigned char* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  auto feed_double = [&](double v) { feed(&v, sizeof v); };
  feed_double(prof.arena.half_width);
  feed_double(prof.arena.half_height);
  feed_double(prof.arena.altitude);
  feed_double(prof.arena.alpha);
  for (const auto& u : prof.users) {
    feed_double(u.x);
    feed_double(u.y);
    feed_double(u.w);
    const int pref = u.pref ? (*u.pref == Preference::Adverse ? 2 : 1) : 0;
    const int pair = u.prefs ? 1 + (u.prefs->toward_first == Preference::Adverse) * 2 +
                                   (u.prefs->toward_second == Preference::Adverse)
                             : 0;
    feed(&pref, sizeof pref);
    feed(&pair, sizeof pair);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace uav
