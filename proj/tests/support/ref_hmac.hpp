#pragma once

// Reference HMAC-SHA-256 oracle for tests. Written straight from the
// FIPS 180-4 / RFC 2104 definitions and kept independent of the library's
// OpenSSL-backed implementation so the two can check each other.

#include <array>
#include <cstdint>
#include <vector>

namespace refcrypto {

using Bytes = std::vector<std::uint8_t>;

std::array<std::uint8_t, 32> sha256(const Bytes& message);
std::array<std::uint8_t, 32> hmac_sha256(const Bytes& key,
                                         const Bytes& message);

/// The key-derivation step built on the reference HMAC:
/// HMAC(key, FC || P0 || L0 || ...), 2-octet big-endian lengths.
std::array<std::uint8_t, 32> ref_kdf(const Bytes& key, std::uint8_t fc,
                                     const std::vector<Bytes>& params);

}  // namespace refcrypto
