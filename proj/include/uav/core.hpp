// Domain types for the UAV placement games: the ground arena, user reports
// with weights and preference declarations, and UAV placements.
#ifndef UAV_CORE_HPP
#define UAV_CORE_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace uav {

// A user either wants the UAV nearby (Favorable, type 1) or far away
// (Adverse, type 2).
enum class Preference { Favorable, Adverse };

// Per-UAV preferences in the two-UAV game: toward UAV 1 and UAV 2.
struct PreferencePair {
  Preference toward_first;
  Preference toward_second;

  bool operator==(const PreferencePair&) const = default;
};

// Rectangular ground region [0, 2A] x [0, 2B], fixed hover altitude z0 and
// path-loss exponent alpha in [2, 6].
struct Arena {
  double half_width = 1.0;   // A
  double half_height = 1.0;  // B
  double altitude = 0.0;     // z0
  double alpha = 2.0;

  double width() const { return 2.0 * half_width; }
  double height() const { return 2.0 * half_height; }

  bool contains(double x, double y) const {
    return x >= 0.0 && x <= width() && y >= 0.0 && y <= height();
  }

  // Throws std::invalid_argument when A, B, z0 or alpha is out of range.
  void validate() const;
};

// One user's (possibly misreported) ground location, weight and preference
// declaration. `pref` is used by the single-UAV dual-preference game,
// `prefs` only by the two-UAV game.
struct UserReport {
  double x = 0.0;
  double y = 0.0;
  double w = 1.0;
  std::optional<Preference> pref;
  std::optional<PreferencePair> prefs;
};

// Ordered list of user reports over a common arena; the input to every
// mechanism and oracle. User order is preserved: any rule referring to a
// "user index" means the position in this list.
struct Profile {
  Arena arena;
  std::vector<UserReport> users;

  std::size_t size() const { return users.size(); }
  bool unit_weights() const;

  // Validates the arena and that every user lies inside it with w > 0.
  void validate() const;
};

// A single UAV position (x, y, z).
struct Placement {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Placement&) const = default;
};

// Ordered positions of k UAVs; each entry carries its own altitude.
struct MultiPlacement {
  std::vector<Placement> placements;

  std::size_t size() const { return placements.size(); }
};

}  // namespace uav

#endif
