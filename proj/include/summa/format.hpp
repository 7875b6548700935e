#pragma once

#include <charconv>
#include <string>

namespace summa {

/// Shortest round-trip decimal form; locale independent and deterministic.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace summa
