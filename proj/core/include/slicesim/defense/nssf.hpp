#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicesim/defense/alert.hpp"
#include "slicesim/nas/snssai.hpp"

namespace slicesim::defense {

/// One slice allocation as recorded by the AMF.
struct AllocationEvent {
  double time_s = 0;
  std::string supi;
  nas::Snssai slice;
};

struct NssfConfig {
  double window_s = 1.0;
  double k_sigma = 3.0;
  unsigned min_baseline_windows = 10;
};

class InsufficientBaselineError : public std::runtime_error {
 public:
  explicit InsufficientBaselineError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Per-slice share of one window's allocations. Windows with no allocations
/// are skipped, so shares always sum to 1.
struct WindowShares {
  double window_start_s = 0;
  std::map<nas::Snssai, double> shares;
};

std::vector<WindowShares> allocation_shares(
    const std::vector<AllocationEvent>& events, double window_s);

/// Per-slice allocation-share statistics over the baseline windows.
struct NssfBaseline {
  std::map<nas::Snssai, double> mean_share;
  std::map<nas::Snssai, double> sigma_share;
  unsigned window_count = 0;
};

/// Baseline from the first `min_baseline_windows` non-empty windows of a
/// benign trace. Throws InsufficientBaselineError when the trace has fewer
/// non-empty windows than required.
NssfBaseline build_nssf_baseline(const std::vector<AllocationEvent>& events,
                                 const NssfConfig& cfg);

/// Aggregate slice-distribution detector: alerts whenever a window's share
/// for some slice exceeds baseline mean + k*sigma. A benign trace stays
/// silent against its own baseline; a mass redirection to one slice drives
/// that slice's share past the threshold.
std::vector<Alert> nssf_check(const std::vector<AllocationEvent>& events,
                              const NssfBaseline& baseline,
                              const NssfConfig& cfg);

}  // namespace slicesim::defense
