#pragma once

#include <stdexcept>
#include <vector>

#include "slicesim/common/bytes.hpp"
#include "slicesim/keys/hmac.hpp"

namespace slicesim::keys {

class KdfError : public std::runtime_error {
 public:
  explicit KdfError(const std::string& what) : std::runtime_error(what) {}
};

/// Key derivation step: HMAC-SHA-256(key, S) with
///   S = FC || P0 || L0 || P1 || L1 || ...
/// where each Ln is the 2-octet big-endian length of Pn. Throws KdfError on
/// an empty parameter list or a parameter longer than 65535 octets.
Digest kdf(BytesView key, std::uint8_t fc, const std::vector<Bytes>& params);

}  // namespace slicesim::keys
