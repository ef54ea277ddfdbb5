// Strategyproofness deviation testing, empirical approximation-ratio checks
// against the proven bounds, and the power-inequality property checks.
#ifndef UAV_VERIFICATION_HPP
#define UAV_VERIFICATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "uav/core.hpp"
#include "uav/oracles.hpp"

namespace uav {

// Which objective a profile's users are evaluated under.
enum class Game {
  Favorable,    // single UAV, cost minimized
  Obnoxious,    // single UAV, interference utility maximized
  DualSingle,   // single UAV, shifted dual utility maximized
  TwoUavDual,   // two UAVs, per-UAV preference pairs
  KObnoxious,   // k UAVs, total interference utility maximized
  KFavorable,   // k UAVs, min-distance service cost minimized
};

// A named placement rule plus the game it plays. Single-UAV rules are
// wrapped as one-element MultiPlacements so deviation checks are uniform.
struct Mechanism {
  std::string name;
  Game game = Game::Favorable;
  int k = 1;
  bool weight_blind = false;
  bool expected_strategyproof = true;
  std::function<MultiPlacement(const Profile&)> run;
};

// Known names: median, wmedian, corner-w, corner-u, dual-majority,
// two-uav-dual, k-endpoints, percentile, and the non-strategyproof
// baselines wmean-baseline and opt-corner-baseline. k applies to
// k-endpoints and percentile.
Mechanism make_mechanism(const std::string& name, int k = 2);
std::vector<std::string> mechanism_names();

bool objective_minimized(Game game);
double user_objective(const Mechanism& m, const MultiPlacement& mp,
                      const UserReport& truthful, const Arena& a);
double social_objective(const Mechanism& m, const Profile& prof,
                        const MultiPlacement& mp);

struct DeviationReport {
  std::size_t user_index = 0;
  UserReport truthful;
  UserReport deviation;
  double objective_truthful = 0.0;
  double objective_deviating = 0.0;
  double improvement = 0.0;
};

// Per-domain candidate misreports: the arena boundaries and midline, every
// reported coordinate, midpoints of consecutive distinct coordinates, and
// the midline straddle points A(1 +/- 1e-7). Mechanism outcomes depend only
// on coordinate order and midline side, so any profitable deviation has a
// witness in this set.
std::vector<double> deviation_coordinates(const Profile& prof, bool x_domain);

// Evaluates every candidate deviation (locations crossed over x and y, and
// preference reports for the dual games) for every user; returns all
// deviations that improve the deviator's true objective by more than tol.
std::vector<DeviationReport> check_strategyproof(const Mechanism& m,
                                                 const Profile& prof,
                                                 double tol = 1e-9);

// Random-deviation sweep with the same acceptance rule as the candidate set.
std::vector<DeviationReport> fuzz_strategyproof(const Mechanism& m,
                                                const Profile& prof,
                                                int samples_per_user,
                                                std::uint64_t seed,
                                                double tol = 1e-9);

struct RatioReport {
  std::string mechanism;
  double alpha = 2.0;
  std::string profile_digest;
  double mechanism_objective = 0.0;
  double oracle_objective = 0.0;
  double ratio = 1.0;
  double bound = 1.0;
  double slack = 0.0;  // relative: 1e-9 plus the oracle's value tolerance
  bool violation = false;
};

// Proven approximation-ratio bound of a mechanism at the given alpha; the
// weight-blind variants depend on the profile's w_max/w_min.
double theorem_bound(const Mechanism& m, const Profile& prof, double alpha);

// Empirical ratio against the matching oracle for each alpha. Requires
// z0 = 0 (the proofs' precondition). Grid-backed oracles use `grid`.
std::vector<RatioReport> check_ratio(const Mechanism& m, const Profile& prof,
                                     const std::vector<double>& alphas,
                                     const GridOptions& grid = {});

struct PowerInequalityReport {
  std::size_t samples = 0;
  bool pass = false;
  // Normalized slack of the binding side of each inequality, minimized over
  // all samples; nonnegative up to -1e-9 when the lemmas hold.
  double worst_margin_lower = 0.0;
  double worst_margin_upper = 0.0;
};

// Draws C, D in [0,10] and E in [2,6] and checks
// C^E + D^E <= (C+D)^E <= 2^(E-1) (C^E + D^E) within 1e-9 relative.
PowerInequalityReport check_power_inequalities(std::size_t samples,
                                               std::uint64_t seed);

// Re-runs a weight-blind mechanism under random weight perturbations and
// requires bitwise-identical placements. Rejects mechanisms that read
// weights.
bool check_weight_independence(const Mechanism& m, const Profile& prof,
                               int perturbations, std::uint64_t seed);

// Short stable hex digest of a profile's contents.
std::string profile_digest(const Profile& prof);

}  // namespace uav

#endif
