#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slicesim::nas {

/// Slice identifier: mandatory 8-bit Slice/Service Type plus an optional
/// 24-bit Slice Differentiator.
struct Snssai {
  std::uint8_t sst = 0;
  std::optional<std::uint32_t> sd;  // 24-bit when present

  friend bool operator==(const Snssai&, const Snssai&) = default;
  friend auto operator<=>(const Snssai& a, const Snssai& b) {
    if (auto c = a.sst <=> b.sst; c != 0) return c;
    // SD-absent orders before any concrete SD of the same SST.
    std::uint64_t av = a.sd ? 1 + static_cast<std::uint64_t>(*a.sd) : 0;
    std::uint64_t bv = b.sd ? 1 + static_cast<std::uint64_t>(*b.sd) : 0;
    return av <=> bv;
  }
};

constexpr std::uint32_t kSdMax = 0xFFFFFF;

/// Standardized SST code points.
constexpr std::uint8_t kSstEmbb = 1;
constexpr std::uint8_t kSstUrllc = 2;
constexpr std::uint8_t kSstMmtc = 3;

/// "SST:1 SD:0x010203" / "SST:1 SD:none" — the form used in run logs.
std::string format_snssai(const Snssai& s);

/// "1/0x010203" or bare "1" — the compact form used in scenario files.
std::string format_snssai_compact(const Snssai& s);

/// Parses the compact form; returns nullopt on malformed input or SD out of
/// 24-bit range. Accepts decimal or 0x-prefixed SD.
std::optional<Snssai> parse_snssai(const std::string& text);

std::string format_snssai_list(const std::vector<Snssai>& list);

/// Human label for the standardized slice types ("eMBB", "URLLC", "mMTC");
/// other SSTs map to "SST<n>".
std::string slice_purpose_tag(std::uint8_t sst);

}  // namespace slicesim::nas
