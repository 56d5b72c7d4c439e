#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace slicesim::sim {

/// Simulated time in integer microseconds. The event grid is quantized to
/// 1 us so event ordering never depends on floating-point rounding.
using SimTime = std::int64_t;

constexpr SimTime kMicrosPerSecond = 1'000'000;

inline SimTime seconds_to_time(double s) {
  return static_cast<SimTime>(std::llround(s * 1e6));
}

inline double time_to_seconds(SimTime t) {
  return static_cast<double>(t) / 1e6;
}

/// "T+<seconds, 3 decimals>" prefix used by run logs.
std::string format_timestamp(SimTime t);

}  // namespace slicesim::sim
