#include "uav/format.hpp"

#include <charconv>
#include <cmath>

namespace uav {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  for (int precision = 1; precision <= 12; ++precision) {
    const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                   std::chars_format::general, precision);
    *res.ptr = '\0';
    double parsed = 0.0;
    std::from_chars(buf, res.ptr, parsed);
    if (parsed == value) return buf;
  }
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 12);
  *res.ptr = '\0';
  return buf;
}

}  // namespace uav
