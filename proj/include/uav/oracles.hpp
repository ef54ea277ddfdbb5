// Social-optimum oracles for every game: closed forms where available,
// corner enumeration, convex coordinate search and a zooming grid search
// used both as a general oracle and as a cross-check.
#ifndef UAV_ORACLES_HPP
#define UAV_ORACLES_HPP

#include <functional>

#include "uav/core.hpp"

namespace uav {

enum class OracleMethod { ClosedForm, CornerEnumeration, ConvexSearch, GridSearch };

struct OracleResult {
  Placement placement;
  double value = 0.0;
  OracleMethod method = OracleMethod::ClosedForm;
  // Documented value slack: 0 for exact methods; a relative allowance for
  // lattice-backed searches. Searches only ever return feasible placements,
  // so a minimization result upper-bounds the optimum and a maximization
  // result lower-bounds it regardless of this figure.
  double value_tolerance = 0.0;
  // Finite-difference gradient norm at the returned placement, where the
  // optimum is interior (favorable oracles). NaN when not applicable.
  double stationarity_norm = 0.0;
};

struct MultiOracleResult {
  MultiPlacement placements;
  double value = 0.0;
  OracleMethod method = OracleMethod::ClosedForm;
  double value_tolerance = 0.0;
};

struct GridOptions {
  int resolution = 400;  // lattice cells per axis on the first pass
  int zoom_passes = 3;   // successive 10x refinements around the incumbent
};

// Relative slack attributed to a grid/convex-search value when comparing it
// against an independently computed objective.
inline constexpr double kSearchValueTolerance = 1e-6;

// Optimal social cost for all-favorable users. alpha = 2 uses the weighted
// mean closed form; larger alpha falls back to alternating per-coordinate
// ternary search on the convex objective.
OracleResult opt_favorable(const Profile& prof);

// Optimal social utility for all-adverse users: evaluates the four corners
// and returns the argmax, ties toward the lexicographically smallest corner.
OracleResult opt_obnoxious(const Profile& prof);

// The alpha = 2 weighted-mean corner rule for the obnoxious game:
// x = 0 iff xbar >= A, else 2A; y analogous.
Placement obnoxious_corner_rule(const Profile& prof);

// Optimal single-UAV dual-preference utility. alpha = 2 solves the
// per-domain quadratic over {clipped stationary point, 0, 2A}; other alpha
// uses the zooming grid search.
OracleResult opt_dual_single(const Profile& prof, const GridOptions& grid = {});

// Optimal two-UAV dual-preference utility at alpha = 2 and Z_j = 0, via the
// per-domain, per-UAV quadratic candidate sets.
MultiOracleResult opt_two_uav(const Profile& prof);

// Optimal utility for k obnoxious UAVs at alpha = 2 and Z_j = 0:
// per domain k * max(sum w x^2, sum w (x-2A)^2), all UAVs at the best corner.
MultiOracleResult opt_k_obnoxious(const Profile& prof, int k);

// Lattice search over the arena with successive 10x refinements around the
// incumbent. Minimization upper-bounds the optimum, maximization
// lower-bounds it; resolution >= 2.
OracleResult grid_search(const std::function<double(double, double)>& objective,
                         const Arena& a, const GridOptions& options, bool maximize);

}  // namespace uav

#endif
