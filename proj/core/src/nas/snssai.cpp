#include "slicesim/nas/snssai.hpp"

#include <cstdio>
#include <cstdlib>

namespace slicesim::nas {

std::string format_snssai(const Snssai& s) {
  char buf[40];
  if (s.sd) {
    std::snprintf(buf, sizeof(buf), "SST:%u SD:0x%06x", s.sst, *s.sd);
  } else {
    std::snprintf(buf, sizeof(buf), "SST:%u SD:none", s.sst);
  }
  return buf;
}

std::string format_snssai_compact(const Snssai& s) {
  char buf[32];
  if (s.sd) {
    std::snprintf(buf, sizeof(buf), "%u/0x%06x", s.sst, *s.sd);
  } else {
    std::snprintf(buf, sizeof(buf), "%u", s.sst);
  }
  return buf;
}

std::optional<Snssai> parse_snssai(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const char* p = text.c_str();
  char* end = nullptr;
  long sst = std::strtol(p, &end, 10);
  if (end == p || sst < 0 || sst > 255) return std::nullopt;
  Snssai out;
  out.sst = static_cast<std::uint8_t>(sst);
  if (*end == '\0') return out;
  if (*end != '/') return std::nullopt;
  const char* sd_text = end + 1;
  if (*sd_text == '\0') return std::nullopt;
  unsigned long sd = std::strtoul(sd_text, &end, 0);
  if (*end != '\0' || sd > kSdMax) return std::nullopt;
  out.sd = static_cast<std::uint32_t>(sd);
  return out;
}

std::string format_snssai_list(const std::vector<Snssai>& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i != 0) out += ", ";
    out += format_snssai_compact(list[i]);
  }
  return out;
}

std::string slice_purpose_tag(std::uint8_t sst) {
  switch (sst) {
    case kSstEmbb:
      return "eMBB";
    case kSstUrllc:
      return "URLLC";
    case kSstMmtc:
      return "mMTC";
    default:
      return "SST" + std::to_string(sst);
  }
}

}  // namespace slicesim::nas
