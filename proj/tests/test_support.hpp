#pragma once

#include <algorithm>
#include <cmath>

namespace radonfd::test {

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

}  // namespace radonfd::test
