#include "slicesim/keys/hmac.hpp"

#include <openssl/hmac.h>

#include <stdexcept>

namespace slicesim::keys {

Digest hmac_sha256(BytesView key, BytesView message) {
  Digest out{};
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
           message.data(), message.size(), out.data(), &len) == nullptr ||
      len != out.size()) {
    throw std::runtime_error("HMAC-SHA-256 failed");
  }
  return out;
}

}  // namespace slicesim::keys
