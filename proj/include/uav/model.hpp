// Cost and utility evaluation shared by every mechanism, oracle and
// experiment. All functions are pure.
#ifndef UAV_MODEL_HPP
#define UAV_MODEL_HPP

#include <limits>

#include "uav/core.hpp"

namespace uav {

// Raises a squared distance to alpha/2, with fast paths for the integer and
// half-integer exponents used throughout.
double pow_half_alpha(double squared, double alpha);

// Service cost of a favorable user:
//   w * ((x_u - x_p)^2 + (y_u - y_p)^2 + z_p^2)^(alpha/2).
// Throws std::domain_error when the user or placement leaves the arena.
double cost(const Placement& p, const UserReport& u, const Arena& a);

// Interference utility of an adverse user; same functional form as cost,
// interpreted as a quantity to maximize.
double utility_adverse(const Placement& p, const UserReport& u, const Arena& a);

// Shifted utility in the single-UAV dual-preference game (unit weights only):
//   favorable: ((2A)^2 - dx^2 + (2B)^2 - dy^2 + z^2)^(alpha/2)
//   adverse:   (dx^2 + dy^2 + z^2)^(alpha/2)
// Nonnegative for in-arena inputs. Throws on non-unit weight or missing pref.
double utility_dual(const Placement& p, const UserReport& u, const Arena& a);

// Two-UAV dual-preference utility u_i^1 + u_i^2 where, per UAV j,
//   favorable: (2A)^2 - (X_j - x_i)^2 + (2B)^2 - (Y_j - y_i)^2
//   adverse:   (X_j - x_i)^2 + (Y_j - y_i)^2 + Z_j^2
// Defined for alpha = 2 only; requires the user's per-UAV preference pair.
double utility_two_uav(const MultiPlacement& mp, const UserReport& u,
                       const Arena& a);

// Sum of user costs (every user treated as favorable).
double social_cost(const Profile& prof, const Placement& p);

// Sum of adverse utilities (every user treated as adverse).
double social_utility_adverse(const Profile& prof, const Placement& p);

// Sum of dual-preference utilities.
double social_utility_dual(const Profile& prof, const Placement& p);

// Sum of two-UAV utilities.
double social_utility_two_uav(const Profile& prof, const MultiPlacement& mp);

// w_i = SNR_th * sigma^2 / theta. All inputs must be positive.
double weight_from_link(double snr_threshold, double noise_power,
                        double ref_channel_power);

// Ratio of two nonnegative objectives; a degenerate 0/0 instance (the
// mechanism already sits on a zero-valued optimum) counts as exactly 1.
inline double objective_ratio(double numerator, double denominator) {
  if (denominator == 0.0)
    return numerator == 0.0 ? 1.0
                            : std::numeric_limits<double>::infinity();
  return numerator / denominator;
}

}  // namespace uav

#endif
