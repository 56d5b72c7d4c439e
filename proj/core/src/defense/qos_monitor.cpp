#include "slicesim/defense/qos_monitor.hpp"

#include <cstdio>
#include <stdexcept>

namespace slicesim::defense {

const char* alert_kind_name(AlertKind k) {
  switch (k) {
    case AlertKind::QosIntegrity:
      return "QosIntegrity";
    case AlertKind::DistributionAnomaly:
      return "DistributionAnomaly";
    case AlertKind::BehaviorAnomaly:
      return "BehaviorAnomaly";
  }
  return "?";
}

QosExpectation expectation_from_profile(const dataplane::SliceProfile& p) {
  QosExpectation e;
  e.snssai = p.snssai;
  e.max_rtt_ms = 2.0 * (p.base_delay_ms + p.jitter_ms) * 1.25;
  return e;
}

bool violates(const QosExpectation& expect, const dataplane::KpiRecord& kpi) {
  if (expect.min_bitrate_bps && kpi.bitrate_bps < *expect.min_bitrate_bps) {
    return true;
  }
  if (expect.max_rtt_ms && kpi.rtt_ms > *expect.max_rtt_ms) return true;
  if (expect.max_loss_frac && kpi.loss_frac > *expect.max_loss_frac) {
    return true;
  }
  return false;
}

std::vector<Alert> qim_check(const QosExpectation& expect,
                             const std::vector<dataplane::KpiRecord>& kpis,
                             unsigned window_count,
                             const std::string& subject) {
  if (window_count < 1) {
    throw std::invalid_argument("qim_check: window count must be >= 1");
  }
  if (!expect.min_bitrate_bps && !expect.max_rtt_ms && !expect.max_loss_frac) {
    throw std::invalid_argument("qim_check: expectation carries no bound");
  }

  std::vector<Alert> alerts;
  unsigned streak = 0;
  double streak_start = 0;
  for (const auto& kpi : kpis) {
    if (!violates(expect, kpi)) {
      streak = 0;  // compliant window re-arms the monitor
      continue;
    }
    if (streak == 0) streak_start = kpi.window_start_s;
    ++streak;
    if (streak == window_count) {
      char detail[160];
      std::snprintf(detail, sizeof(detail),
                    "%u consecutive violating windows from t=%.1fs "
                    "(rtt=%.2fms bitrate=%.0fbps loss=%.3f)",
                    window_count, streak_start, kpi.rtt_ms, kpi.bitrate_bps,
                    kpi.loss_frac);
      alerts.push_back(Alert{kpi.window_start_s, AlertKind::QosIntegrity,
                             subject, detail});
    }
  }
  return alerts;
}

}  // namespace slicesim::defense
