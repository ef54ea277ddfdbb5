// Mechanisms and objectives for k >= 2 UAVs: the two-UAV dual-preference
// majority, fixed endpoint placement for k obnoxious UAVs, and the
// percentile mechanism for k favorable UAVs.
#ifndef UAV_MULTI_UAV_HPP
#define UAV_MULTI_UAV_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "uav/core.hpp"

namespace uav {

// Which of the eight preference/side classes a user falls in, per domain.
// Classes 1..8 cross side ([0,A] vs (A,2A]) with the preference pair
// ((1,1),(1,2),(2,1),(2,2)); left-side users take classes 1-4, right-side
// users 5-8.
struct QSetCounts {
  std::size_t q[9] = {};  // 1-based; q[0] unused

  std::size_t operator[](int i) const { return q[i]; }
};

QSetCounts classify_q_sets(const Profile& prof, bool x_domain);

// Two-UAV dual-preference majority (alpha = 2, unit weights, preference
// pairs required): (X1,X2) = (0,2A) if |Q2|+|Q7| >= |Q3|+|Q6| else (2A,0);
// same rule in the y-domain. Altitudes default to the arena z0.
MultiPlacement two_uav_dual_mechanism(
    const Profile& prof,
    std::optional<std::pair<double, double>> altitudes = std::nullopt);

// Places ceil(k/2) obnoxious UAVs at (0,0) and the rest at (2A,2B),
// independent of any profile. Altitudes default to the arena z0 for all k.
MultiPlacement k_obnoxious_endpoints(int k, const Arena& a,
                                     const std::vector<double>& altitudes = {});

// Rescales positive real weights to positive integers by the least common
// denominator; throws when the expanded multiset would exceed max_units.
std::vector<std::int64_t> rescale_weights_to_integers(
    const std::vector<double>& weights, std::int64_t max_units = 1000000);

// Percentile mechanism for k favorable UAVs: in each domain, UAV j takes the
// element of index floor((W-1) * j/(k+1)) + 1 (1-based) of the coordinate
// multiset in which user i appears w_i times, weights rescaled to integers.
// The expansion is virtual; only prefix sums are formed.
MultiPlacement percentile_mechanism(const Profile& prof, int k);

// Service cost for a favorable user served by the closest of k UAVs:
//   min_j w * ((x-X_j)^2 + (y-Y_j)^2 + Z_j^2)^(alpha/2).
double min_service_cost(const MultiPlacement& mp, const UserReport& u,
                        const Arena& a);

// Total interference utility of an adverse user from k UAVs:
//   sum_j w * ((x-X_j)^2 + (y-Y_j)^2 + Z_j^2)^(alpha/2).
double multi_adverse_utility(const MultiPlacement& mp, const UserReport& u,
                             const Arena& a);

double social_min_service_cost(const Profile& prof, const MultiPlacement& mp);
double social_utility_multi_adverse(const Profile& prof, const MultiPlacement& mp);

}  // namespace uav

#endif
