#include <doctest.h>

#include <algorithm>

#include "slicesim/nas/security.hpp"
#include "slicesim/sim/rng.hpp"

using namespace slicesim;
using keys::CipherAlg;
using keys::Direction;
using keys::IntegrityAlg;
using nas::NasMessage;
using nas::SecuredPdu;
using nas::SecurityContext;
using nas::SecurityError;
using nas::Snssai;

namespace {

SecurityContext make_ctx(CipherAlg cipher, IntegrityAlg integrity,
                         std::uint8_t key_fill = 0x5A) {
  SecurityContext ctx;
  ctx.k_nasint = Bytes(16, key_fill);
  ctx.cipher = cipher;
  ctx.integrity = integrity;
  return ctx;
}

NasMessage sample_smc_complete() {
  return nas::make_security_mode_complete(nas::make_registration_request(
      "001010000000001", std::nullopt,
      std::vector<Snssai>{Snssai{1, 0x010203}, Snssai{2, std::nullopt}}));
}

bool contains_subsequence(BytesView haystack, BytesView needle) {
  if (needle.empty() || haystack.size() < needle.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

}  // namespace

TEST_CASE("first protected uplink carries count 0 and then increments") {
  SecurityContext ctx = make_ctx(CipherAlg::Ea0, IntegrityAlg::Nia2Sim);
  SecuredPdu first =
      nas::apply_security(sample_smc_complete(), ctx, Direction::Uplink);
  CHECK(first.header.count == 0);
  SecuredPdu second =
      nas::apply_security(sample_smc_complete(), ctx, Direction::Uplink);
  CHECK(second.header.count == 1);
  // Downlink counts run independently.
  SecuredPdu down = nas::apply_security(
      nas::make_registration_accept({Snssai{1, 0xffffff}}, {}), ctx,
      Direction::Downlink);
  CHECK(down.header.count == 0);
}

TEST_CASE("NIA0 yields an all-zero mac") {
  SecurityContext ctx = make_ctx(CipherAlg::Ea0, IntegrityAlg::Nia0);
  SecuredPdu pdu =
      nas::apply_security(sample_smc_complete(), ctx, Direction::Uplink);
  CHECK(pdu.mac == 0);
}

TEST_CASE("EA0 payloads are plaintext-readable without keys") {
  SecurityContext ctx = make_ctx(CipherAlg::Ea0, IntegrityAlg::Nia2Sim);
  NasMessage msg = sample_smc_complete();
  SecuredPdu pdu = nas::apply_security(msg, ctx, Direction::Uplink);
  NasMessage read_back = nas::decode(pdu.payload);  // no context involved
  CHECK(read_back == msg);
  CHECK((*read_back.embedded_request)->requested_nssai ==
        msg.embedded_request.value()->requested_nssai);
}

TEST_CASE("verify_and_open inverts apply_security") {
  SecurityContext ue = make_ctx(CipherAlg::Ea2Sim, IntegrityAlg::Nia2Sim);
  SecurityContext amf = ue;
  NasMessage msg = sample_smc_complete();
  SecuredPdu pdu = nas::apply_security(msg, ue, Direction::Uplink);
  CHECK(nas::verify_and_open(pdu, amf, Direction::Uplink) == msg);
}

TEST_CASE("a tampered payload fails integrity under NIA2-sim") {
  SecurityContext ue = make_ctx(CipherAlg::Ea0, IntegrityAlg::Nia2Sim);
  SecurityContext amf = ue;
  SecuredPdu pdu =
      nas::apply_security(sample_smc_complete(), ue, Direction::Uplink);
  pdu.payload[pdu.payload.size() / 2] ^= 0x01;
  CHECK_THROWS_AS(nas::verify_and_open(pdu, amf, Direction::Uplink),
                  SecurityError);
}

TEST_CASE("the same tampering is accepted under NIA0") {
  SecurityContext ue = make_ctx(CipherAlg::Ea0, IntegrityAlg::Nia0);
  SecurityContext amf = ue;
  SecuredPdu pdu =
      nas::apply_security(sample_smc_complete(), ue, Direction::Uplink);
  // Flip the SD inside the embedded request; null integrity notices nothing.
  NasMessage inner = nas::decode(pdu.payload);
  (*inner.embedded_request)->requested_nssai =
      std::vector<Snssai>{Snssai{3, 0x030405}};
  pdu.payload = nas::encode(inner);
  NasMessage accepted = nas::verify_and_open(pdu, amf, Direction::Uplink);
  CHECK((*accepted.embedded_request)->requested_nssai ==
        std::vector<Snssai>{Snssai{3, 0x030405}});
}

TEST_CASE("10^4 random one-bit tampers: none verify") {
  SecurityContext ue = make_ctx(CipherAlg::Ea0, IntegrityAlg::Nia2Sim);
  SecuredPdu pdu =
      nas::apply_security(sample_smc_complete(), ue, Direction::Uplink);
  sim::RngStream rng(99, "tamper");
  int accepted = 0;
  for (int i = 0; i < 10'000; ++i) {
    SecuredPdu bad = pdu;
    auto bit = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(pdu.payload.size()) * 8 -
                               1));
    bad.payload[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    SecurityContext amf = make_ctx(CipherAlg::Ea0, IntegrityAlg::Nia2Sim);
    try {
      (void)nas::verify_and_open(bad, amf, Direction::Uplink);
      ++accepted;
    } catch (const SecurityError&) {
    }
  }
  CHECK(accepted == 0);
}

TEST_CASE("replayed counts are detected") {
  SecurityContext ue = make_ctx(CipherAlg::Ea0, IntegrityAlg::Nia2Sim);
  SecurityContext amf = ue;
  SecuredPdu pdu =
      nas::apply_security(sample_smc_complete(), ue, Direction::Uplink);
  (void)nas::verify_and_open(pdu, amf, Direction::Uplink);
  try {
    (void)nas::verify_and_open(pdu, amf, Direction::Uplink);
    FAIL("expected replay detection");
  } catch (const SecurityError& e) {
    CHECK(e.kind() == SecurityError::Kind::ReplayDetected);
  }
}

TEST_CASE("an unestablished context refuses to seal or open") {
  SecurityContext empty;
  CHECK_THROWS_AS(
      nas::apply_security(sample_smc_complete(), empty, Direction::Uplink),
      SecurityError);
}

TEST_CASE("non-null cipher hides the requested list from the wire") {
  // No contiguous payload slice equals the plaintext encoding of the
  // requested_nssai field, over a generated corpus.
  sim::RngStream rng(4242, "cipher.leak");
  for (int i = 0; i < 200; ++i) {
    std::vector<Snssai> nssai;
    auto len = static_cast<unsigned>(rng.uniform_int(1, 4));
    for (unsigned k = 0; k < len; ++k) {
      Snssai s;
      s.sst = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
      if (rng.uniform01() < 0.5) {
        s.sd = static_cast<std::uint32_t>(rng.uniform_int(0, nas::kSdMax));
      }
      nssai.push_back(s);
    }
    NasMessage msg = nas::make_security_mode_complete(
        nas::make_registration_request("001010000000001", std::nullopt,
                                       nssai));
    SecurityContext ctx = make_ctx(CipherAlg::Ea2Sim, IntegrityAlg::Nia2Sim,
                                   static_cast<std::uint8_t>(i + 1));
    SecuredPdu pdu = nas::apply_security(msg, ctx, Direction::Uplink);
    Bytes field = nas::encode_requested_nssai_field(nssai);
    CHECK_FALSE(contains_subsequence(pdu.payload, field));
    // And the ciphered payload is not trivially decodable.
    CHECK_THROWS_AS(nas::decode(pdu.payload), nas::CodecError);
  }
}

TEST_CASE("cipher transform is involutive") {
  Bytes key(16, 0x77);
  Bytes payload = to_bytes("the quick brown fox jumps over the lazy gnb");
  Bytes once = nas::cipher_transform(key, 5, Direction::Downlink, payload);
  CHECK(once != payload);
  Bytes twice = nas::cipher_transform(key, 5, Direction::Downlink, once);
  CHECK(twice == payload);
}

TEST_CASE("pdu hex dump is lowercase space-separated octets") {
  SecuredPdu pdu;
  pdu.header.cipher_eid = CipherAlg::Ea0;
  pdu.header.integrity_aid = IntegrityAlg::Nia2Sim;
  pdu.header.count = 1;
  pdu.payload = Bytes{0xAB, 0x01};
  pdu.mac = 0xDEADBEEF;
  CHECK(nas::pdu_to_hex(pdu) == "02 00 00 00 01 00 02 ab 01 de ad be ef");
}
