#pragma once

#include <stdexcept>

#include "slicesim/keys/algorithms.hpp"
#include "slicesim/keys/chain.hpp"
#include "slicesim/nas/codec.hpp"
#include "slicesim/nas/message.hpp"

namespace slicesim::nas {

class SecurityError : public std::runtime_error {
 public:
  enum class Kind { NoContext, IntegrityFailure, ReplayDetected };
  SecurityError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Secured NAS PDU. Under EA0 the payload octets are the plaintext message
/// encoding; under NIA0 the mac is all-zero.
struct SecuredPdu {
  struct Header {
    keys::CipherAlg cipher_eid = keys::CipherAlg::Ea0;
    keys::IntegrityAlg integrity_aid = keys::IntegrityAlg::Nia0;
    std::uint32_t count = 0;
    friend bool operator==(const Header&, const Header&) = default;
  };
  Header header;
  Bytes payload;
  std::uint32_t mac = 0;

  friend bool operator==(const SecuredPdu&, const SecuredPdu&) = default;
};

/// Octet serialization used for trace digests: header octet
/// (eid high nibble, aid low nibble), 4-octet count, 2-octet payload length,
/// payload, 4-octet mac. All big-endian.
Bytes pdu_to_octets(const SecuredPdu& pdu);

/// Lowercase space-separated hex of pdu_to_octets, the trace-log form.
std::string pdu_to_hex(const SecuredPdu& pdu);

/// Per-endpoint NAS security context. Counts are split per direction:
/// tx counts stamp outbound PDUs, expected rx counts implement replay
/// detection for inbound ones. A context is confined to one actor.
struct SecurityContext {
  Bytes k_nasint;  // 16 octets once established
  keys::CipherAlg cipher = keys::CipherAlg::Ea0;
  keys::IntegrityAlg integrity = keys::IntegrityAlg::Nia0;
  std::uint32_t tx_count[2] = {0, 0};           // indexed by Direction
  std::uint32_t expected_rx_count[2] = {0, 0};  // indexed by Direction

  bool established() const { return !k_nasint.empty(); }
};

/// Encodes, ciphers (identity under EA0) and integrity-protects msg with the
/// context's count for `direction`, then advances that count. An uplink
/// cipher override lets SECURITY MODE COMMAND go out unciphered while the
/// context itself selects a non-null cipher.
SecuredPdu apply_security(const NasMessage& msg, SecurityContext& ctx,
                          keys::Direction direction);
SecuredPdu apply_security(const NasMessage& msg, SecurityContext& ctx,
                          keys::Direction direction,
                          keys::CipherAlg cipher_override);

/// Recomputes the mac; on match deciphers and decodes, then bumps the
/// expected count for the direction. Throws SecurityError{IntegrityFailure}
/// on mac mismatch and SecurityError{ReplayDetected} when pdu.count is below
/// the expected receive count.
NasMessage verify_and_open(const SecuredPdu& pdu, SecurityContext& ctx,
                           keys::Direction direction);

/// Keystream transform used for the EA2 stand-in: counter-mode blocks of
/// HMAC-SHA-256(key, count || dir || block-index) XORed into the payload.
/// Involutive, so the same call deciphers.
Bytes cipher_transform(BytesView key, std::uint32_t count,
                       keys::Direction direction, BytesView payload);

}  // namespace slicesim::nas
