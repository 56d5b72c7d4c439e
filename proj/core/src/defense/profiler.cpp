#include "slicesim/defense/profiler.hpp"

namespace slicesim::defense {

unsigned SupiHistory::total() const {
  unsigned n = 0;
  for (const auto& [slice, count] : request_counts) n += count;
  return n;
}

ProfileScore profile_check(const SupiHistory& history,
                           const std::vector<nas::Snssai>& request,
                           const std::optional<std::string>& context_tac) {
  ProfileScore out;
  if (history.total() == 0) {
    out.low_confidence = true;  // first contact must not alert
    return out;
  }
  if (request.empty()) return out;

  unsigned unseen = 0;
  for (const auto& s : request) {
    auto it = history.request_counts.find(s);
    if (it == history.request_counts.end() || it->second == 0) ++unseen;
  }
  double fraction_new =
      static_cast<double>(unseen) / static_cast<double>(request.size());

  double context_factor = 1.0;  // stationary device, full weight
  if (history.last_tac && context_tac && *history.last_tac != *context_tac) {
    context_factor = 0.8;  // device moved; placeholder weighting
  }
  out.score = fraction_new * context_factor;
  return out;
}

}  // namespace slicesim::defense
