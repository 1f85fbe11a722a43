#pragma once

#include <cstdint>
#include <string>

namespace edgeslicer {

/// Locale-free shortest form with 12 significant digits, "." decimal
/// separator. Every CSV/JSON emitter goes through this.
std::string format_real(double v);

std::string format_int(std::int64_t v);

}  // namespace edgeslicer
