#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicesim/dataplane/kpi.hpp"
#include "slicesim/dataplane/profile.hpp"
#include "slicesim/sim/rng.hpp"

namespace slicesim::dataplane {

class InvalidProfileError : public std::runtime_error {
 public:
  explicit InvalidProfileError(const std::string& what)
      : std::runtime_error(what) {}
};

/// UPF processor-load model. kappa is calibrated so that forty 25 Mbit/s
/// video-class flows (1470-byte payloads saturating a 1 Gbit/s slice at
/// ~85k pps) pin the mean near 80%.
struct CpuModelParams {
  double idle_pct = 1.0;
  double cap_pct = 82.0;
  double kappa_pct_per_pps = 80.0 * 1470.0 * 8.0 / 1e9;
  double user_frac = 0.15;
  double wait_max_pct = 15.0;
  double wait_floor_pct = 0.5;
  // Relative slack on offered-vs-capacity so that demand tuned exactly to
  // the rate limit counts as saturated despite per-window count truncation.
  double saturation_tolerance = 1e-6;
};

/// One slice's UPF: a rate-R FIFO shaper with a drop-tail queue, followed by
/// the slice's latency model (base delay plus uniform jitter). Packets are
/// processed analytically at arrival, so the model needs no events of its
/// own: service completion and delivery times are computed in exact double
/// seconds off the shaper's virtual clock.
///
/// KPI attribution is by send-time window. Conservation holds exactly:
/// offered = delivered + dropped + residual, where residual counts packets
/// still in flight at the horizon.
class UpfModel {
 public:
  /// `horizon_s` is the end of simulated time used to classify residual
  /// packets; `window_s` the KPI/CPU window length. Throws
  /// InvalidProfileError when the profile fails validation.
  UpfModel(SliceProfile profile, sim::RngStream jitter_stream,
           double window_s, double horizon_s, CpuModelParams cpu = {});

  /// Registers a session; returns the index used by on_packet.
  int add_session(std::string session_id, double start_s, double end_s);

  /// One packet entering the shaper. Send times must be non-decreasing per
  /// session; cross-session ordering may wobble within an event-grid tick.
  void on_packet(int session, double send_time_s, unsigned bytes);

  /// Per-session, per-window KPI records, ordered by (window, session).
  std::vector<KpiRecord> kpi_records() const;

  /// Per-window CPU samples over [0, horizon).
  std::vector<CpuSample> cpu_samples() const;

  struct Totals {
    std::uint64_t offered = 0;
    std::uint64_t delivered = 0;  // delivery time within the horizon
    std::uint64_t dropped = 0;
    std::uint64_t residual = 0;  // in queue or in flight at the horizon
  };
  Totals totals() const { return totals_; }
  Totals session_totals(int session) const;

  const SliceProfile& profile() const { return profile_; }
  double window_s() const { return window_s_; }

 private:
  struct WinAccum {
    std::uint64_t offered = 0;
    std::uint64_t dropped = 0;
    std::uint64_t delivered = 0;
    std::uint64_t delivered_bytes = 0;
    double delay_sum_s = 0;
    double jitter_abs_sum_s = 0;
    std::uint64_t jitter_pairs = 0;
  };
  struct Session {
    std::string id;
    double start_s = 0;
    double end_s = 0;
    int first_window = 0;
    std::vector<WinAccum> windows;
    double prev_delay_s = -1;  // <0 until the first delivery
    Totals totals;
  };
  struct CpuWin {
    std::uint64_t offered = 0;
    std::uint64_t offered_bytes = 0;
    std::uint64_t processed = 0;
  };

  WinAccum& win(Session& s, double t_s);
  CpuWin& cpu_win(double t_s);

  SliceProfile profile_;
  sim::RngStream jitter_;
  double window_s_;
  double horizon_s_;
  CpuModelParams cpu_;
  double rate_bps_;
  double jitter_s_;

  double busy_until_s_ = 0;
  std::deque<double> in_system_;  // service completion times
  std::vector<Session> sessions_;
  std::vector<CpuWin> cpu_windows_;
  Totals totals_;
};

}  // namespace slicesim::dataplane
