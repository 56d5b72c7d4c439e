#pragma once

#include <memory>

#include "slicesim/dataplane/upf.hpp"
#include "slicesim/sim/event_loop.hpp"

namespace slicesim::dataplane {

/// One CBR stream feeding a UPF. Packet k is sent at
/// start + phase + k * interval (exact doubles; only the event grid is
/// quantized), until `end_s`.
class TrafficSource {
 public:
  TrafficSource(sim::EventLoop& loop, UpfModel& upf, int session,
                const TrafficProfile& profile, double start_s, double end_s,
                double phase_s);

  /// Schedules the first packet event.
  void start();

 private:
  void send(std::uint64_t k);

  sim::EventLoop& loop_;
  UpfModel& upf_;
  int session_;
  double interval_s_;
  unsigned payload_bytes_;
  double start_s_;
  double end_s_;
  double phase_s_;
};

/// Spawns `n_ue` independent CBR streams with per-stream phase offsets drawn
/// from the seeded stream "phase.<session_id>". Session ids are
/// "<label_prefix><k>". Throws std::invalid_argument when n_ue is 0 or the
/// profile fails validation.
std::vector<std::unique_ptr<TrafficSource>> generate(
    sim::EventLoop& loop, UpfModel& upf, const TrafficProfile& profile,
    unsigned n_ue, double start_s, double duration_s, std::uint64_t seed,
    const std::string& label_prefix);

}  // namespace slicesim::dataplane
