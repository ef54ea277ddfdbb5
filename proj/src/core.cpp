#include "uav/core.hpp"

#include <stdexcept>
#include <string>

namespace uav {

void Arena::validate() const {
  if (!(half_width > 0.0)) throw std::invalid_argument("arena: A must be > 0");
  if (!(half_height > 0.0)) throw std::invalid_argument("arena: B must be > 0");
  if (!(altitude >= 0.0)) throw std::invalid_argument("arena: z0 must be >= 0");
  if (!(alpha >= 2.0 && alpha <= 6.0))
    throw std::invalid_argument("arena: alpha must lie in [2, 6]");
}

bool Profile::unit_weights() const {
  for (const auto& u : users)
    if (u.w != 1.0) return false;
  return true;
}

void Profile::validate() const {
  arena.validate();
  if (users.empty()) throw std::invalid_argument("profile: needs at least one user");
  for (std::size_t i = 0; i < users.size(); ++i) {
    const auto& u = users[i];
    if (!arena.contains(u.x, u.y))
      throw std::domain_error("profile: user " + std::to_string(i) +
                              " lies outside the arena");
    if (!(u.w > 0.0))
      throw std::invalid_argument("profile: user " + std::to_string(i) +
                                  " has non-positive weight");
  }
}

}  // namespace uav
