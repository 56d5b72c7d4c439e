#pragma once

#include <cstdint>
#include <string_view>

namespace slicesim::keys {

/// NAS integrity algorithm identifiers (4-bit code points). NIA2 is backed
/// by a truncated HMAC-SHA-256 stand-in here, hence the Sim suffix; the
/// code point matches the AES-CMAC slot.
enum class IntegrityAlg : std::uint8_t {
  Nia0 = 0b0000,    // null integrity, MAC is all-zero
  Nia2Sim = 0b0010,
};

/// NAS ciphering algorithm identifiers (4-bit code points). EA0 is the null
/// cipher: payload octets go out as plaintext.
enum class CipherAlg : std::uint8_t {
  Ea0 = 0b0000,
  Ea2Sim = 0b0010,
};

enum class Direction : std::uint8_t {
  Uplink = 0,
  Downlink = 1,
};

/// Bearer label mixed into every NAS MAC.
inline constexpr std::string_view kBearer = "3gpp";

const char* integrity_alg_name(IntegrityAlg a);
const char* cipher_alg_name(CipherAlg a);
const char* direction_name(Direction d);

}  // namespace slicesim::keys
