#pragma once

#include <cstdio>
#include <string>

namespace ellipselaw {

// Shortest representation that round-trips a double exactly.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace ellipselaw
