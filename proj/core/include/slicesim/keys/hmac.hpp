#pragma once

#include <array>

#include "slicesim/common/bytes.hpp"

namespace slicesim::keys {

using Digest = std::array<std::uint8_t, 32>;

/// HMAC-SHA-256 (OpenSSL libcrypto underneath).
Digest hmac_sha256(BytesView key, BytesView message);

}  // namespace slicesim::keys
