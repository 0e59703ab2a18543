#pragma once

#include <cstdio>
#include <string>

namespace hstretch {

// Ten significant digits, '.' decimal separator regardless of locale settings
// that affect iostreams.
inline std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace hstretch
