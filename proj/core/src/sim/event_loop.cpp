#include "slicesim/sim/event_loop.hpp"

#include <cstdio>

namespace slicesim::sim {

std::string format_timestamp(SimTime t) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "T+%.3f", time_to_seconds(t));
  return buf;
}

std::uint64_t EventLoop::schedule(SimTime fire_time, std::string target,
                                  Handler fn) {
  if (fire_time < now_) {
    throw PastTimeError("schedule: fire_time " +
                        std::to_string(time_to_seconds(fire_time)) +
                        "s is before current time " +
                        std::to_string(now_seconds()) + "s");
  }
  std::uint64_t seq = next_sequence_++;
  queue_.push(Event{fire_time, seq, std::move(target), std::move(fn)});
  return seq;
}

std::uint64_t EventLoop::run_until(SimTime t_end) {
  std::uint64_t fired_now = 0;
  while (!queue_.empty() && queue_.top().fire_time <= t_end) {
    // priority_queue::top is const; the event is moved out via the pop idiom.
    Event ev = std::move(const_cast<Event&>(queue_.top()));
    queue_.pop();
    now_ = ev.fire_time;
    if (trace_enabled_) {
      trace_.push_back(TraceEntry{ev.fire_time, ev.sequence, ev.target});
    }
    ev.fn();
    ++fired_now;
  }
  if (t_end > now_) now_ = t_end;
  fired_ += fired_now;
  return fired_now;
}

}  // namespace slicesim::sim
