#ifndef UAV_FORMAT_HPP
#define UAV_FORMAT_HPP

#include <string>

namespace uav {

// Shortest decimal representation that parses back to the exact value,
// capped at 12 significant digits. Locale-independent.
std::string format_double(double value);

}  // namespace uav

#endif
