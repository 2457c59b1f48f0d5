#pragma once

#include <cstdio>
#include <cstdlib>

namespace chromabound::detail {

/// Rounds to 12 significant digits. nlohmann::json prints the shortest
/// round-trip representation, so the rounded value prints with at most 12 digits.
inline double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace chromabound::detail
