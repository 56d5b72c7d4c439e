#pragma once

#include <algorithm>
#include <stdexcept>

namespace slicesim::dataplane {

struct SteadyState {
  double goodput_bps = 0;  // per flow
  double loss_frac = 0;
};

/// Closed-form fair-share prediction for n equal CBR flows of `demand_bps`
/// each through a `capacity_bps` shaper: goodput = min(demand, capacity/n),
/// loss = 1 - goodput/demand. This is the independent oracle the
/// event-driven path is checked against.
inline SteadyState steady_state(unsigned n, double demand_bps,
                                double capacity_bps) {
  if (n == 0 || demand_bps <= 0 || capacity_bps <= 0) {
    throw std::invalid_argument("steady_state: all arguments must be positive");
  }
  double goodput = std::min(demand_bps, capacity_bps / n);
  return SteadyState{goodput, 1.0 - goodput / demand_bps};
}

}  // namespace slicesim::dataplane
