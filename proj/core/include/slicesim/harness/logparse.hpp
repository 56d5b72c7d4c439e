#pragma once

#include <string>
#include <vector>

#include "slicesim/defense/nssf.hpp"

namespace slicesim::harness {

/// Structured view of an AMF run log, for re-running detectors offline.
struct AmfLogEvents {
  struct Request {
    double time_s = 0;
    std::string supi;
    std::vector<nas::Snssai> requested;
  };
  std::vector<defense::AllocationEvent> allocations;
  std::vector<Request> requests;
  unsigned warn_count = 0;
  unsigned error_count = 0;
};

/// Parses lines of the documented grammar
/// "T+<seconds> [amf] <LEVEL>: <text>"; unknown text lines are kept only in
/// the level counters.
AmfLogEvents parse_amf_log(const std::vector<std::string>& lines);

}  // namespace slicesim::harness
