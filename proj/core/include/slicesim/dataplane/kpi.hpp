#pragma once

#include <string>

namespace slicesim::dataplane {

/// Windowed per-session measurements. `rtt_ms` is the mean one-way delay of
/// packets sent in the window, measured across the shaped egress path; the
/// reverse direction is unshaped and contributes nothing. `jitter_ms` is the
/// mean absolute difference of consecutive one-way delays.
struct KpiRecord {
  double window_start_s = 0;
  std::string session_id;
  double bitrate_bps = 0;  // delivered goodput
  double jitter_ms = 0;
  double rtt_ms = 0;
  double loss_frac = 0;  // dropped / offered in window; 0 for idle windows
};

/// Windowed UPF processor load decomposition. user + system + wait = mean;
/// wait stays zero strictly below saturation.
struct CpuSample {
  double window_start_s = 0;
  double mean_pct = 0;
  double user_pct = 0;
  double system_pct = 0;
  double wait_pct = 0;
};

}  // namespace slicesim::dataplane
