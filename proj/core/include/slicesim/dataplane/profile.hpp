#pragma once

#include <string>
#include <vector>

#include "slicesim/nas/snssai.hpp"

namespace slicesim::dataplane {

enum class Shaper { HtbFqCodel, HtbNetemFqCodel, HtbTbf };

const char* shaper_name(Shaper s);

/// Provisioning parameters for one slice's UPF on its N6 egress.
struct SliceProfile {
  nas::Snssai snssai;
  double rate_mbps = 0;
  double ceil_mbps = 0;
  double base_delay_ms = 0;
  double jitter_ms = 0;  // half-width of the uniform jitter band
  unsigned queue_limit_packets = 100;
  Shaper shaper = Shaper::HtbFqCodel;

  double rate_bps() const { return rate_mbps * 1e6; }

  /// Empty when valid, else one line per violation.
  std::vector<std::string> validate() const;
};

/// Constant-bitrate UDP application class.
struct TrafficProfile {
  std::string name;
  nas::Snssai intended_slice;
  double bandwidth_bps = 0;
  unsigned payload_bytes = 0;
  unsigned concurrency_min = 1;
  unsigned concurrency_max = 1;

  /// Constant packet interval: payload_bytes * 8 / bandwidth_bps.
  double interval_s() const {
    return static_cast<double>(payload_bytes) * 8.0 / bandwidth_bps;
  }

  std::vector<std::string> validate() const;
};

}  // namespace slicesim::dataplane
