#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicesim/sim/time.hpp"

namespace slicesim::sim {

/// Scheduling into the past is a caller bug, not a recoverable outcome.
class PastTimeError : public std::runtime_error {
 public:
  explicit PastTimeError(const std::string& what) : std::runtime_error(what) {}
};

/// One record per fired event when tracing is enabled.
struct TraceEntry {
  SimTime fire_time = 0;
  std::uint64_t sequence = 0;
  std::string target;
};

/// Single-threaded discrete-event loop. Events fire in (fire_time, sequence)
/// lexicographic order; sequence is the insertion counter, so simultaneous
/// events fire in the order they were scheduled.
class EventLoop {
 public:
  using Handler = std::function<void()>;

  /// Queues `fn` at `fire_time` and returns the event's unique sequence
  /// number. Throws PastTimeError if fire_time < now().
  std::uint64_t schedule(SimTime fire_time, std::string target, Handler fn);

  std::uint64_t schedule_at_seconds(double fire_time_s, std::string target,
                                    Handler fn) {
    return schedule(seconds_to_time(fire_time_s), std::move(target),
                    std::move(fn));
  }

  /// Fires every event with fire_time <= t_end, then advances the clock to
  /// t_end. Returns the number of events fired.
  std::uint64_t run_until(SimTime t_end);

  SimTime now() const { return now_; }
  double now_seconds() const { return time_to_seconds(now_); }
  std::uint64_t fired_count() const { return fired_; }
  bool empty() const { return queue_.empty(); }

  void enable_trace() { trace_enabled_ = true; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

 private:
  struct Event {
    SimTime fire_time;
    std::uint64_t sequence;
    std::string target;
    Handler fn;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
      return a.sequence > b.sequence;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  SimTime now_ = 0;
  std::uint64_t next_sequence_ = 0;
  std::uint64_t fired_ = 0;
  bool trace_enabled_ = false;
  std::vector<TraceEntry> trace_;
};

}  // namespace slicesim::sim
