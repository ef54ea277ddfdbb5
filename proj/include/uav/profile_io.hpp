// Profile JSON ingestion (the single CLI input format) and the canonical
// example profiles used in documentation and tests.
#ifndef UAV_PROFILE_IO_HPP
#define UAV_PROFILE_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "uav/core.hpp"

namespace uav {

// Parse failure at a specific JSON location, e.g. "/users/3/w".
class ProfileFormatError : public std::runtime_error {
 public:
  ProfileFormatError(std::string path, const std::string& message)
      : std::runtime_error(message + " (at " + path + ")"),
        json_path(std::move(path)) {}

  std::string json_path;
};

// Format: {"arena": {"A","B","z0","alpha"}, "users": [{"x","y","w",
// optional "pref" in {favorable,adverse}, optional "prefs": [p1,p2]}]}.
Profile parse_profile_json(const std::string& text);
Profile load_profile(const std::string& path);

std::string profile_to_json(const Profile& prof);

// Canonical profiles: intro-2user, obnoxious-2user, percentile-14user.
Profile example_profile(const std::string& name);
std::vector<std::string> example_profile_names();

}  // namespace uav

#endif
