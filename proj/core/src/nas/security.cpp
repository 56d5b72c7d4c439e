#include "slicesim/nas/security.hpp"

#include "slicesim/common/hex.hpp"

namespace slicesim::nas {

Bytes pdu_to_octets(const SecuredPdu& pdu) {
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(
      (static_cast<std::uint8_t>(pdu.header.cipher_eid) << 4) |
      static_cast<std::uint8_t>(pdu.header.integrity_aid)));
  put_u32_be(out, pdu.header.count);
  put_u16_be(out, static_cast<std::uint16_t>(pdu.payload.size()));
  append(out, pdu.payload);
  put_u32_be(out, pdu.mac);
  return out;
}

std::string pdu_to_hex(const SecuredPdu& pdu) {
  return to_hex_spaced(pdu_to_octets(pdu));
}

Bytes cipher_transform(BytesView key, std::uint32_t count,
                       keys::Direction direction, BytesView payload) {
  Bytes out(payload.begin(), payload.end());
  Bytes block_input;
  block_input.reserve(9);
  put_u32_be(block_input, count);
  block_input.push_back(static_cast<std::uint8_t>(direction));
  put_u32_be(block_input, 0);  // block index, rewritten below

  for (std::size_t off = 0, index = 0; off < out.size();
       off += 32, ++index) {
    block_input[5] = static_cast<std::uint8_t>(index >> 24);
    block_input[6] = static_cast<std::uint8_t>(index >> 16);
    block_input[7] = static_cast<std::uint8_t>(index >> 8);
    block_input[8] = static_cast<std::uint8_t>(index);
    keys::Digest block = keys::hmac_sha256(key, block_input);
    for (std::size_t i = 0; i < 32 && off + i < out.size(); ++i) {
      out[off + i] ^= block[i];
    }
  }
  return out;
}

namespace {

void require_context(const SecurityContext& ctx) {
  if (!ctx.established()) {
    throw SecurityError(SecurityError::Kind::NoContext,
                        "security context has no NAS integrity key");
  }
}

SecuredPdu seal(const NasMessage& msg, SecurityContext& ctx,
                keys::Direction direction, keys::CipherAlg cipher) {
  require_context(ctx);
  const auto dir_index = static_cast<std::size_t>(direction);
  SecuredPdu pdu;
  pdu.header.cipher_eid = cipher;
  pdu.header.integrity_aid = ctx.integrity;
  pdu.header.count = ctx.tx_count[dir_index];

  Bytes plaintext = encode(msg);
  pdu.payload = (cipher == keys::CipherAlg::Ea0)
                    ? plaintext
                    : cipher_transform(ctx.k_nasint, pdu.header.count,
                                       direction, plaintext);
  pdu.mac = keys::compute_mac(ctx.k_nasint, pdu.header.count, direction,
                              keys::kBearer, pdu.payload, ctx.integrity);
  ctx.tx_count[dir_index]++;
  return pdu;
}

}  // namespace

SecuredPdu apply_security(const NasMessage& msg, SecurityContext& ctx,
                          keys::Direction direction) {
  return seal(msg, ctx, direction, ctx.cipher);
}

SecuredPdu apply_security(const NasMessage& msg, SecurityContext& ctx,
                          keys::Direction direction,
                          keys::CipherAlg cipher_override) {
  return seal(msg, ctx, direction, cipher_override);
}

NasMessage verify_and_open(const SecuredPdu& pdu, SecurityContext& ctx,
                           keys::Direction direction) {
  require_context(ctx);
  const auto dir_index = static_cast<std::size_t>(direction);

  std::uint32_t expected_mac =
      keys::compute_mac(ctx.k_nasint, pdu.header.count, direction,
                        keys::kBearer, pdu.payload, pdu.header.integrity_aid);
  if (expected_mac != pdu.mac) {
    throw SecurityError(SecurityError::Kind::IntegrityFailure,
                        "mac mismatch on " +
                            std::string(keys::direction_name(direction)) +
                            " pdu with count " +
                            std::to_string(pdu.header.count));
  }
  if (pdu.header.count < ctx.expected_rx_count[dir_index]) {
    throw SecurityError(SecurityError::Kind::ReplayDetected,
                        "count " + std::to_string(pdu.header.count) +
                            " below expected " +
                            std::to_string(ctx.expected_rx_count[dir_index]));
  }

  Bytes plaintext = (pdu.header.cipher_eid == keys::CipherAlg::Ea0)
                        ? pdu.payload
                        : cipher_transform(ctx.k_nasint, pdu.header.count,
                                           direction, pdu.payload);
  NasMessage msg = decode(plaintext);
  ctx.expected_rx_count[dir_index] = pdu.header.count + 1;
  return msg;
}

}  // namespace slicesim::nas
