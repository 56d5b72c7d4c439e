#pragma once

#include <string>

namespace slicesim::defense {

enum class AlertKind { QosIntegrity, DistributionAnomaly, BehaviorAnomaly };

const char* alert_kind_name(AlertKind k);

struct Alert {
  double time_s = 0;
  AlertKind kind = AlertKind::QosIntegrity;
  std::string subject;  // session, slice or supi
  std::string detail;   // evidence: windows / measured statistic vs threshold
};

}  // namespace slicesim::defense
