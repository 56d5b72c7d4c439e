#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slicesim/sim/time.hpp"

namespace slicesim::actors {

enum class LogLevel { Info, Warn, Error };

const char* log_level_name(LogLevel level);

struct AmfLogEntry {
  sim::SimTime time = 0;
  LogLevel level = LogLevel::Info;
  std::string text;
};

/// Append-only AMF run log. Successful registrations, including
/// default-slice fallback, stay at INFO; integrity failures log ERROR and
/// replays WARN.
class AmfLog {
 public:
  void info(sim::SimTime t, std::string text) {
    append({t, LogLevel::Info, std::move(text)});
  }
  void warn(sim::SimTime t, std::string text) {
    append({t, LogLevel::Warn, std::move(text)});
  }
  void error(sim::SimTime t, std::string text) {
    append({t, LogLevel::Error, std::move(text)});
  }
  void append(AmfLogEntry entry);

  const std::vector<AmfLogEntry>& entries() const { return entries_; }
  std::size_t warn_count() const { return warns_; }
  std::size_t error_count() const { return errors_; }

  /// "T+<seconds, 3 decimals> [amf] <LEVEL>: <text>"
  static std::string format_line(const AmfLogEntry& entry);
  std::vector<std::string> lines() const;

 private:
  std::vector<AmfLogEntry> entries_;
  std::size_t warns_ = 0;
  std::size_t errors_ = 0;
};

}  // namespace slicesim::actors
