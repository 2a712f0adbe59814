#pragma once

#include <string>

namespace radonfd {

/// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double v);
/// %.17g in the C locale.
std::string format_full(double v);

}  // namespace radonfd
