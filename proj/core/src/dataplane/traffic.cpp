#include "slicesim/dataplane/traffic.hpp"

#include <stdexcept>

namespace slicesim::dataplane {

TrafficSource::TrafficSource(sim::EventLoop& loop, UpfModel& upf, int session,
                             const TrafficProfile& profile, double start_s,
                             double end_s, double phase_s)
    : loop_(loop),
      upf_(upf),
      session_(session),
      interval_s_(profile.interval_s()),
      payload_bytes_(profile.payload_bytes),
      start_s_(start_s),
      end_s_(end_s),
      phase_s_(phase_s) {}

void TrafficSource::start() {
  double t0 = start_s_ + phase_s_;
  if (t0 >= end_s_) return;
  loop_.schedule(sim::seconds_to_time(t0), "pkt", [this]() { send(0); });
}

void TrafficSource::send(std::uint64_t k) {
  // Send times are recomputed from k so interval rounding never accumulates.
  double t = start_s_ + phase_s_ + static_cast<double>(k) * interval_s_;
  upf_.on_packet(session_, t, payload_bytes_);
  double t_next =
      start_s_ + phase_s_ + static_cast<double>(k + 1) * interval_s_;
  if (t_next < end_s_) {
    loop_.schedule(sim::seconds_to_time(t_next), "pkt",
                   [this, k]() { send(k + 1); });
  }
}

std::vector<std::unique_ptr<TrafficSource>> generate(
    sim::EventLoop& loop, UpfModel& upf, const TrafficProfile& profile,
    unsigned n_ue, double start_s, double duration_s, std::uint64_t seed,
    const std::string& label_prefix) {
  if (n_ue == 0) {
    throw std::invalid_argument("generate: n_ue must be >= 1");
  }
  auto errs = profile.validate();
  if (!errs.empty()) {
    throw std::invalid_argument("traffic profile " + profile.name + ": " +
                                errs.front());
  }
  std::vector<std::unique_ptr<TrafficSource>> sources;
  sources.reserve(n_ue);
  for (unsigned k = 0; k < n_ue; ++k) {
    std::string session_id = label_prefix + std::to_string(k);
    sim::RngStream phase_stream(seed, "phase." + session_id);
    double phase = phase_stream.uniform01() * profile.interval_s();
    int session = upf.add_session(session_id, start_s, start_s + duration_s);
    sources.push_back(std::make_unique<TrafficSource>(
        loop, upf, session, profile, start_s, start_s + duration_s, phase));
    sources.back()->start();
  }
  return sources;
}

}  // namespace slicesim::dataplane
