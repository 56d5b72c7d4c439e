#include "slicesim/dataplane/upf.hpp"

#include <algorithm>
#include <cmath>

namespace slicesim::dataplane {

const char* shaper_name(Shaper s) {
  switch (s) {
    case Shaper::HtbFqCodel:
      return "htb_fq_codel";
    case Shaper::HtbNetemFqCodel:
      return "htb_netem_fq_codel";
    case Shaper::HtbTbf:
      return "htb_tbf";
  }
  return "?";
}

std::vector<std::string> SliceProfile::validate() const {
  std::vector<std::string> errs;
  if (rate_mbps <= 0) errs.push_back("rate_mbps must be positive");
  if (ceil_mbps <= 0) errs.push_back("ceil_mbps must be positive");
  if (rate_mbps > ceil_mbps) errs.push_back("rate_mbps must be <= ceil_mbps");
  if (base_delay_ms < 0) errs.push_back("base_delay_ms must be >= 0");
  if (jitter_ms < 0) errs.push_back("jitter_ms must be >= 0");
  if (queue_limit_packets == 0) errs.push_back("queue_limit must be positive");
  return errs;
}

std::vector<std::string> TrafficProfile::validate() const {
  std::vector<std::string> errs;
  if (bandwidth_bps <= 0) errs.push_back("bandwidth must be positive");
  if (payload_bytes == 0) errs.push_back("payload must be positive");
  if (concurrency_min == 0 || concurrency_max < concurrency_min) {
    errs.push_back("concurrency range malformed");
  }
  return errs;
}

UpfModel::UpfModel(SliceProfile profile, sim::RngStream jitter_stream,
                   double window_s, double horizon_s, CpuModelParams cpu)
    : profile_(std::move(profile)),
      jitter_(std::move(jitter_stream)),
      window_s_(window_s),
      horizon_s_(horizon_s),
      cpu_(cpu),
      rate_bps_(profile_.rate_bps()),
      jitter_s_(profile_.jitter_ms / 1e3) {
  auto errs = profile_.validate();
  if (!errs.empty()) {
    throw InvalidProfileError("slice " +
                              nas::format_snssai_compact(profile_.snssai) +
                              ": " + errs.front());
  }
  if (window_s_ <= 0 || horizon_s_ <= 0) {
    throw InvalidProfileError("window and horizon must be positive");
  }
  cpu_windows_.resize(
      static_cast<std::size_t>(std::ceil(horizon_s_ / window_s_)) + 1);
}

int UpfModel::add_session(std::string session_id, double start_s,
                          double end_s) {
  Session s;
  s.id = std::move(session_id);
  s.start_s = start_s;
  s.end_s = end_s;
  s.first_window = static_cast<int>(start_s / window_s_);
  sessions_.push_back(std::move(s));
  return static_cast<int>(sessions_.size()) - 1;
}

UpfModel::WinAccum& UpfModel::win(Session& s, double t_s) {
  int w = static_cast<int>(t_s / window_s_) - s.first_window;
  if (w < 0) w = 0;
  if (static_cast<std::size_t>(w) >= s.windows.size()) {
    s.windows.resize(static_cast<std::size_t>(w) + 1);
  }
  return s.windows[static_cast<std::size_t>(w)];
}

UpfModel::CpuWin& UpfModel::cpu_win(double t_s) {
  auto w = static_cast<std::size_t>(t_s / window_s_);
  if (w >= cpu_windows_.size()) cpu_windows_.resize(w + 1);
  return cpu_windows_[w];
}

void UpfModel::on_packet(int session, double send_time_s, unsigned bytes) {
  Session& s = sessions_[static_cast<std::size_t>(session)];
  WinAccum& w = win(s, send_time_s);
  CpuWin& cw = cpu_win(send_time_s);
  w.offered++;
  s.totals.offered++;
  totals_.offered++;
  cw.offered++;
  cw.offered_bytes += bytes;

  while (!in_system_.empty() && in_system_.front() <= send_time_s) {
    in_system_.pop_front();
  }
  if (in_system_.size() >= profile_.queue_limit_packets) {
    w.dropped++;
    s.totals.dropped++;
    totals_.dropped++;
    return;
  }

  double service_start = std::max(send_time_s, busy_until_s_);
  double completion = service_start + bytes * 8.0 / rate_bps_;
  busy_until_s_ = completion;
  in_system_.push_back(completion);
  if (completion < horizon_s_) cpu_win(completion).processed++;

  double jitter = jitter_s_ > 0 ? jitter_.uniform(-jitter_s_, jitter_s_) : 0.0;
  double delivery = completion + profile_.base_delay_ms / 1e3 + jitter;
  double delay = delivery - send_time_s;

  if (delivery <= horizon_s_) {
    s.totals.delivered++;
    totals_.delivered++;
  } else {
    s.totals.residual++;
    totals_.residual++;
  }
  w.delivered++;
  w.delivered_bytes += bytes;
  w.delay_sum_s += delay;
  if (s.prev_delay_s >= 0) {
    w.jitter_abs_sum_s += std::abs(delay - s.prev_delay_s);
    w.jitter_pairs++;
  }
  s.prev_delay_s = delay;
}

std::vector<KpiRecord> UpfModel::kpi_records() const {
  // Ordered by (window, session index) so emission is deterministic.
  std::vector<KpiRecord> out;
  int max_windows = 0;
  for (const auto& s : sessions_) {
    int end_w = static_cast<int>((s.end_s - 1e-9) / window_s_);
    max_windows = std::max(max_windows, end_w + 1);
  }
  for (int w = 0; w < max_windows; ++w) {
    for (const auto& s : sessions_) {
      int end_w = static_cast<int>((s.end_s - 1e-9) / window_s_);
      if (w < s.first_window || w > end_w) continue;
      KpiRecord rec;
      rec.window_start_s = w * window_s_;
      rec.session_id = s.id;
      std::size_t idx = static_cast<std::size_t>(w - s.first_window);
      if (idx < s.windows.size()) {
        const WinAccum& acc = s.windows[idx];
        rec.bitrate_bps = acc.delivered_bytes * 8.0 / window_s_;
        rec.rtt_ms =
            acc.delivered ? acc.delay_sum_s / acc.delivered * 1e3 : 0.0;
        rec.jitter_ms = acc.jitter_pairs
                            ? acc.jitter_abs_sum_s / acc.jitter_pairs * 1e3
                            : 0.0;
        rec.loss_frac =
            acc.offered ? static_cast<double>(acc.dropped) / acc.offered : 0.0;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<CpuSample> UpfModel::cpu_samples() const {
  std::vector<CpuSample> out;
  auto n_windows = static_cast<std::size_t>(horizon_s_ / window_s_);
  for (std::size_t w = 0; w < n_windows; ++w) {
    CpuSample sample;
    sample.window_start_s = static_cast<double>(w) * window_s_;
    const CpuWin zero{};
    const CpuWin& cw = w < cpu_windows_.size() ? cpu_windows_[w] : zero;

    double processed_pps = static_cast<double>(cw.processed) / window_s_;
    double offered_bps = cw.offered_bytes * 8.0 / window_s_;
    sample.mean_pct = std::min(
        cpu_.cap_pct, cpu_.idle_pct + cpu_.kappa_pct_per_pps * processed_pps);

    bool saturated =
        offered_bps >= rate_bps_ * (1.0 - cpu_.saturation_tolerance);
    double wait = 0;
    if (saturated) {
      wait = std::max(cpu_.wait_floor_pct,
                      cpu_.wait_max_pct * (1.0 - rate_bps_ / offered_bps));
      wait = std::min(wait, cpu_.wait_max_pct);
    }
    sample.wait_pct = wait;
    sample.user_pct = cpu_.user_frac * sample.mean_pct;
    sample.system_pct = sample.mean_pct - sample.user_pct - sample.wait_pct;
    out.push_back(sample);
  }
  return out;
}

UpfModel::Totals UpfModel::session_totals(int session) const {
  return sessions_[static_cast<std::size_t>(session)].totals;
}

}  // namespace slicesim::dataplane
