#include "slicesim/actors/log.hpp"

namespace slicesim::actors {

const char* log_level_name(LogLevel level) {
  switch (level) {
    case LogLevel::Info:
      return "INFO";
    case LogLevel::Warn:
      return "WARN";
    case LogLevel::Error:
      return "ERROR";
  }
  return "?";
}

void AmfLog::append(AmfLogEntry entry) {
  if (entry.level == LogLevel::Warn) ++warns_;
  if (entry.level == LogLevel::Error) ++errors_;
  entries_.push_back(std::move(entry));
}

std::string AmfLog::format_line(const AmfLogEntry& entry) {
  return sim::format_timestamp(entry.time) + " [amf] " +
         log_level_name(entry.level) + ": " + entry.text;
}

std::vector<std::string> AmfLog::lines() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(format_line(e));
  return out;
}

}  // namespace slicesim::actors
