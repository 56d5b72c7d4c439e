#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicesim/defense/alert.hpp"
#include "slicesim/nas/snssai.hpp"

namespace slicesim::defense {

/// Per-subscriber request history: how often each slice was requested, and
/// the last tracking area seen.
struct SupiHistory {
  std::string supi;
  std::map<nas::Snssai, unsigned> request_counts;
  std::optional<std::string> last_tac;

  unsigned total() const;
};

struct ProfileScore {
  double score = 0;  // in [0, 1]
  bool low_confidence = false;  // cold history, nothing to compare against
  bool high_risk() const { return score >= 0.5; }
};

/// Count-based behavioral profiler skeleton (no learned model). The score
/// is the fraction of requested slices this SUPI has never requested
/// before, scaled by a context factor: 1.0 for a stationary device, 0.8
/// after a tracking-area change (placeholder weighting; there is no
/// principled feature model behind it). Cold histories score 0 with the
/// low-confidence flag set.
ProfileScore profile_check(const SupiHistory& history,
                           const std::vector<nas::Snssai>& request,
                           const std::optional<std::string>& context_tac);

}  // namespace slicesim::defense
