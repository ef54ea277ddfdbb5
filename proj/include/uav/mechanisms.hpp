// The five single-UAV placement mechanisms. Each is a pure function of the
// profile; tie and boundary rules follow the published definitions exactly
// (exact comparisons, no epsilons).
#ifndef UAV_MECHANISMS_HPP
#define UAV_MECHANISMS_HPP

#include "uav/core.hpp"

namespace uav {

enum class MechanismKind {
  Median,
  WeightedMedian,
  WeightedCorner,
  UnweightedCorner,
  DualMajority,
};

// Selection names: median, wmedian, corner-w, corner-u, dual-majority.
const char* mechanism_kind_name(MechanismKind kind);
Placement run_mechanism(MechanismKind kind, const Profile& prof);

// Component-wise median of the reported coordinates; for even n the
// (n/2)-th smallest value (lower median). Weights are ignored entirely.
Placement median_mechanism(const Profile& prof);

// Component-wise weighted median: the coordinate x_{j_q} where q is the
// unique index with sum_{i<=q} w >= sum_{i>q} w and sum_{i<q} w < sum_{i>=q} w
// over the ascending stable ordering.
Placement weighted_median_mechanism(const Profile& prof);

// Obnoxious corner rule on total weight: x = 0 if the weight in [0, A) is
// <= the weight in [A, 2A], else x = 2A; y analogously with B.
Placement weighted_corner_mechanism(const Profile& prof);

// Same corner rule counting users instead of weights; output is independent
// of the reported weights.
Placement unweighted_corner_mechanism(const Profile& prof);

// Dual-preference majority rule. x-domain sets:
//   R1 = {theta=1, x >= A}, R2 = {theta=2, x > A},
//   L1 = {theta=1, x < A},  L2 = {theta=2, x <= A};
// x = 2A if |R1|+|L2| >= |R2|+|L1| else 0; y analogous with B.
// Requires unit weights and a preference on every user.
Placement dual_majority_mechanism(const Profile& prof);

}  // namespace uav

#endif
