#include "edgeslicer/text.hpp"

#include <charconv>
#include <cmath>

namespace edgeslicer {

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[48];
  const auto result =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, result.ptr);
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

}  // namespace edgeslicer
