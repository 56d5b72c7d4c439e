#include <doctest.h>

#include "slicesim/common/hex.hpp"
#include "slicesim/keys/chain.hpp"
#include "slicesim/sim/rng.hpp"
#include "support/ref_hmac.hpp"

using namespace slicesim;
using keys::DerivationInputs;
using keys::IntegrityAlg;

namespace {

Bytes digest_bytes(const std::array<std::uint8_t, 32>& d) {
  return Bytes(d.begin(), d.end());
}

/// The reference chain, computed entirely with the hand-rolled HMAC.
keys::KeyMaterial ref_chain(const Bytes& ck, const Bytes& ik,
                            const std::string& snn, const std::string& supi,
                            const Bytes& abba, IntegrityAlg aid,
                            const Bytes& autn) {
  keys::KeyMaterial km;
  km.ck = ck;
  km.ik = ik;
  Bytes root = ck;
  root.insert(root.end(), ik.begin(), ik.end());
  Bytes snn_b(snn.begin(), snn.end());
  Bytes autn6(autn.begin(), autn.begin() + 6);
  km.k_ausf = digest_bytes(refcrypto::ref_kdf(root, 0x6A, {snn_b, autn6}));
  km.k_seaf = digest_bytes(refcrypto::ref_kdf(km.k_ausf, 0x6C, {snn_b}));
  km.k_amf = digest_bytes(refcrypto::ref_kdf(
      km.k_seaf, 0x6D, {Bytes(supi.begin(), supi.end()), abba}));
  Bytes full = digest_bytes(refcrypto::ref_kdf(
      km.k_amf, 0x69,
      {Bytes{0x02}, Bytes{static_cast<std::uint8_t>(aid)}}));
  km.k_nasint.assign(full.begin() + 16, full.end());
  return km;
}

}  // namespace

TEST_CASE("kdf matches the frozen reference vector") {
  // HMAC-SHA-256 over 69 02 00 01 02 00 01 under the all-zero 32-octet key,
  // frozen from an independent implementation.
  keys::Digest d = keys::kdf(Bytes(32, 0x00), 0x69, {Bytes{0x02}, Bytes{0x02}});
  CHECK(to_hex(Bytes(d.begin(), d.end())) ==
        "5a2d1dee71fa59aa1a0445860b3b2c6159b95886e413ba0d95073ab131bc7507");
}

TEST_CASE("kdf output is always 32 octets and fc-sensitive") {
  Bytes key(32, 0x11);
  keys::Digest a = keys::kdf(key, 0x69, {Bytes{0x02}, Bytes{0x02}});
  keys::Digest b = keys::kdf(key, 0x6D, {Bytes{0x02}, Bytes{0x02}});
  CHECK(a.size() == 32);
  CHECK(a != b);
  // Cross-check both against the reference oracle.
  CHECK(digest_bytes(a) ==
        digest_bytes(refcrypto::ref_kdf(key, 0x69, {{0x02}, {0x02}})));
  CHECK(digest_bytes(b) ==
        digest_bytes(refcrypto::ref_kdf(key, 0x6D, {{0x02}, {0x02}})));
}

TEST_CASE("kdf rejects empty parameter lists and oversized parameters") {
  CHECK_THROWS_AS(keys::kdf(Bytes(32, 0), 0x69, {}), keys::KdfError);
  CHECK_THROWS_AS(keys::kdf(Bytes(32, 0), 0x69, {Bytes(65536, 0xaa)}),
                  keys::KdfError);
}

TEST_CASE("kdf agrees with the reference oracle on random inputs") {
  sim::RngStream rng(77, "kdf.fuzz");
  for (int i = 0; i < 50; ++i) {
    Bytes key = rng.bytes(static_cast<std::size_t>(rng.uniform_int(1, 48)));
    auto fc = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    std::vector<Bytes> params;
    auto n = static_cast<unsigned>(rng.uniform_int(1, 4));
    for (unsigned p = 0; p < n; ++p) {
      params.push_back(
          rng.bytes(static_cast<std::size_t>(rng.uniform_int(0, 40))));
    }
    CHECK(digest_bytes(keys::kdf(key, fc, params)) ==
          digest_bytes(refcrypto::ref_kdf(key, fc, params)));
  }
}

TEST_CASE("derive_chain equals the reference chain on randomized inputs") {
  sim::RngStream rng(1234, "chain.fuzz");
  for (int i = 0; i < 20; ++i) {
    Bytes ck = rng.bytes(16), ik = rng.bytes(16), autn = rng.bytes(16);
    Bytes abba = rng.bytes(2);
    std::string snn = "5G:mnc0" + std::to_string(rng.uniform_int(0, 9)) +
                      ".mcc00" + std::to_string(rng.uniform_int(0, 9)) +
                      ".3gppnetwork.org";
    std::string supi;
    for (int d = 0; d < 15; ++d) {
      supi.push_back(static_cast<char>('0' + rng.uniform_int(0, 9)));
    }
    IntegrityAlg aid =
        rng.uniform01() < 0.5 ? IntegrityAlg::Nia0 : IntegrityAlg::Nia2Sim;

    DerivationInputs in;
    in.snn = snn;
    in.supi = supi;
    in.abba = abba;
    in.aid = aid;
    in.autn = autn;
    keys::KeyMaterial got = keys::derive_chain(ck, ik, in);
    keys::KeyMaterial want = ref_chain(ck, ik, snn, supi, abba, aid, autn);
    CHECK(got == want);
    CHECK(got.k_nasint.size() == 16);
  }
}

TEST_CASE("chain consistency: children re-derive from stored parents") {
  DerivationInputs in;
  in.snn = "5G:mnc01.mcc001.3gppnetwork.org";
  in.supi = "001010000000001";
  in.abba = Bytes{0x00, 0x00};
  in.aid = IntegrityAlg::Nia2Sim;
  in.autn = Bytes(16, 0x42);
  Bytes ck(16, 0x01), ik(16, 0x02);
  keys::KeyMaterial km = keys::derive_chain(ck, ik, in);

  Bytes snn_b = to_bytes(*in.snn);
  keys::Digest seaf = keys::kdf(km.k_ausf, keys::kFcSeaf, {snn_b});
  CHECK(Bytes(seaf.begin(), seaf.end()) == km.k_seaf);
  keys::Digest amf =
      keys::kdf(km.k_seaf, keys::kFcAmf, {to_bytes(*in.supi), *in.abba});
  CHECK(Bytes(amf.begin(), amf.end()) == km.k_amf);
  keys::Digest nasint_full =
      keys::kdf(km.k_amf, keys::kFcNasInt, {Bytes{0x02}, Bytes{0x02}});
  CHECK(Bytes(nasint_full.begin() + 16, nasint_full.end()) == km.k_nasint);
}

TEST_CASE("ue-side and network-side chains agree") {
  DerivationInputs in;
  in.snn = "5G:mnc01.mcc001.3gppnetwork.org";
  in.supi = "001010000000007";
  in.abba = Bytes{0x00, 0x00};
  in.aid = IntegrityAlg::Nia2Sim;
  in.autn = Bytes(16, 0x07);
  Bytes ck(16, 0xAA), ik(16, 0xBB);
  CHECK(keys::derive_chain(ck, ik, in) == keys::derive_chain(ck, ik, in));
}

TEST_CASE("missing inputs are reported by name") {
  DerivationInputs in;
  in.snn = "5G:mnc01.mcc001.3gppnetwork.org";
  in.aid = IntegrityAlg::Nia2Sim;
  try {
    keys::derive_chain(Bytes(16, 0), Bytes(16, 0), in);
    FAIL("expected MissingInputError");
  } catch (const keys::MissingInputError& e) {
    CHECK(e.missing() ==
          std::vector<std::string>{"supi", "abba", "autn"});
  }
}

TEST_CASE("the chain key never depends on the requested slice list") {
  // No KDF input carries the NSSAI, so two registrations differing only in
  // slice preference share all keys.
  DerivationInputs in;
  in.snn = "5G:mnc01.mcc001.3gppnetwork.org";
  in.supi = "001010000000001";
  in.abba = Bytes{0x00, 0x00};
  in.aid = IntegrityAlg::Nia2Sim;
  in.autn = Bytes(16, 0x10);
  Bytes ck(16, 1), ik(16, 2);
  keys::KeyMaterial a = keys::derive_chain(ck, ik, in);
  keys::KeyMaterial b = keys::derive_chain(ck, ik, in);
  CHECK(a == b);
}

TEST_CASE("compute_mac is zero under NIA0 and keyed under NIA2-sim") {
  Bytes key(16, 0x55);
  Bytes payload = to_bytes("some nas payload");
  CHECK(keys::compute_mac(key, 7, keys::Direction::Uplink, keys::kBearer,
                          payload, IntegrityAlg::Nia0) == 0);
  std::uint32_t mac = keys::compute_mac(key, 0, keys::Direction::Uplink,
                                        keys::kBearer, payload,
                                        IntegrityAlg::Nia2Sim);
  CHECK(mac != 0);

  // Flipping any single key bit changes the mac (10^3 random trials).
  sim::RngStream rng(5, "mac.keyflip");
  for (int i = 0; i < 1000; ++i) {
    Bytes flipped = key;
    auto bit = static_cast<std::size_t>(rng.uniform_int(0, 16 * 8 - 1));
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    CHECK(keys::compute_mac(flipped, 0, keys::Direction::Uplink, keys::kBearer,
                            payload, IntegrityAlg::Nia2Sim) != mac);
  }
}

TEST_CASE("compute_mac covers count and direction") {
  Bytes key(16, 0x55);
  Bytes payload = to_bytes("payload");
  auto mac = [&](std::uint32_t count, keys::Direction dir) {
    return keys::compute_mac(key, count, dir, keys::kBearer, payload,
                             IntegrityAlg::Nia2Sim);
  };
  CHECK(mac(0, keys::Direction::Uplink) != mac(1, keys::Direction::Uplink));
  CHECK(mac(0, keys::Direction::Uplink) != mac(0, keys::Direction::Downlink));
}

TEST_CASE("compute_mac matches the reference oracle bytes") {
  Bytes key(16, 0x99);
  Bytes payload = to_bytes("x");
  Bytes msg;
  put_u32_be(msg, 3);
  msg.push_back(0x00);  // uplink
  Bytes bearer = to_bytes(std::string(keys::kBearer));
  msg.insert(msg.end(), bearer.begin(), bearer.end());
  msg.insert(msg.end(), payload.begin(), payload.end());
  auto ref = refcrypto::hmac_sha256(key, msg);
  std::uint32_t want = (static_cast<std::uint32_t>(ref[0]) << 24) |
                       (static_cast<std::uint32_t>(ref[1]) << 16) |
                       (static_cast<std::uint32_t>(ref[2]) << 8) |
                       static_cast<std::uint32_t>(ref[3]);
  CHECK(keys::compute_mac(key, 3, keys::Direction::Uplink, keys::kBearer,
                          payload, IntegrityAlg::Nia2Sim) == want);
}

TEST_CASE("snn is built from the scenario plmn digits") {
  CHECK(keys::build_snn("001", "01") == "5G:mnc01.mcc001.3gppnetwork.org");
}
