#pragma once

#include <optional>
#include <vector>

#include "slicesim/dataplane/kpi.hpp"
#include "slicesim/dataplane/profile.hpp"
#include "slicesim/defense/alert.hpp"
#include "slicesim/nas/snssai.hpp"

namespace slicesim::defense {

/// Expected QoS envelope for sessions on one slice. At least one bound must
/// be present.
struct QosExpectation {
  nas::Snssai snssai;
  std::optional<double> min_bitrate_bps;
  std::optional<double> max_rtt_ms;
  std::optional<double> max_loss_frac;
};

/// Bounds derived from the slice's provisioning, with a x1.25 margin so
/// benign jitter never alerts: max_rtt = 2 * (base_delay + jitter) * 1.25.
QosExpectation expectation_from_profile(const dataplane::SliceProfile& p);

bool violates(const QosExpectation& expect, const dataplane::KpiRecord& kpi);

/// Cross-layer QoS Integrity Monitor over one session's windowed KPI
/// stream. Emits an alert once `window_count` consecutive windows violate
/// any bound, then re-arms after a compliant window. `window_count` must be
/// >= 1.
std::vector<Alert> qim_check(const QosExpectation& expect,
                             const std::vector<dataplane::KpiRecord>& kpis,
                             unsigned window_count,
                             const std::string& subject);

}  // namespace slicesim::defense
