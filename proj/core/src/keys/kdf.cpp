#include "slicesim/keys/kdf.hpp"

namespace slicesim::keys {

Digest kdf(BytesView key, std::uint8_t fc, const std::vector<Bytes>& params) {
  if (params.empty()) {
    throw KdfError("kdf: parameter list must not be empty");
  }
  Bytes s;
  s.push_back(fc);
  for (const auto& p : params) {
    if (p.size() > 0xFFFF) {
      throw KdfError("kdf: parameter longer than 65535 octets");
    }
    append(s, p);
    put_u16_be(s, static_cast<std::uint16_t>(p.size()));
  }
  return hmac_sha256(key, s);
}

}  // namespace slicesim::keys
