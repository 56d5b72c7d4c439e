#include "slicesim/harness/logparse.hpp"

#include <cstdlib>

namespace slicesim::harness {

namespace {

bool take_prefix(std::string& s, const std::string& prefix) {
  if (s.rfind(prefix, 0) != 0) return false;
  s.erase(0, prefix.size());
  return true;
}

std::vector<nas::Snssai> parse_compact_list(const std::string& text) {
  std::vector<nas::Snssai> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t pos = text.find(',', start);
    std::string item = text.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start);
    while (!item.empty() && item.front() == ' ') item.erase(0, 1);
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (auto s = nas::parse_snssai(item)) out.push_back(*s);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

AmfLogEvents parse_amf_log(const std::vector<std::string>& lines) {
  AmfLogEvents out;
  for (const auto& raw : lines) {
    std::string line = raw;
    if (!take_prefix(line, "T+")) continue;
    char* end = nullptr;
    double time_s = std::strtod(line.c_str(), &end);
    line.erase(0, static_cast<std::size_t>(end - line.c_str()));
    if (!take_prefix(line, " [amf] ")) continue;

    if (take_prefix(line, "WARN: ")) {
      out.warn_count++;
      continue;
    }
    if (take_prefix(line, "ERROR: ")) {
      out.error_count++;
      continue;
    }
    if (!take_prefix(line, "INFO: ")) continue;

    if (!take_prefix(line, "UE[")) continue;
    std::size_t close = line.find(']');
    if (close == std::string::npos) continue;
    std::string supi = line.substr(0, close);
    line.erase(0, close + 1);

    if (take_prefix(line, " S-NSSAI[SST:")) {
      std::uint8_t sst =
          static_cast<std::uint8_t>(std::strtoul(line.c_str(), &end, 10));
      line.erase(0, static_cast<std::size_t>(end - line.c_str()));
      nas::Snssai slice{sst, std::nullopt};
      if (take_prefix(line, " SD:0x")) {
        slice.sd = static_cast<std::uint32_t>(
            std::strtoul(line.c_str(), &end, 16));
        line.erase(0, static_cast<std::size_t>(end - line.c_str()));
      } else if (!take_prefix(line, " SD:none")) {
        continue;
      }
      if (line.rfind("] allocated", 0) == 0) {
        out.allocations.push_back(
            defense::AllocationEvent{time_s, supi, slice});
      }
      continue;
    }

    const std::string marker = " security mode complete verified, "
                               "requested S-NSSAI [";
    if (take_prefix(line, marker)) {
      std::size_t closing = line.rfind(']');
      if (closing == std::string::npos) continue;
      std::string list = line.substr(0, closing);
      AmfLogEvents::Request req;
      req.time_s = time_s;
      req.supi = supi;
      if (list != "none") req.requested = parse_compact_list(list);
      out.requests.push_back(std::move(req));
    }
  }
  return out;
}

}  // namespace slicesim::harness
