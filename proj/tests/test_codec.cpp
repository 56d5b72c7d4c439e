#include <doctest.h>

#include "slicesim/nas/codec.hpp"
#include "slicesim/sim/rng.hpp"

using namespace slicesim;
using nas::CodecError;
using nas::MessageKind;
using nas::NasMessage;
using nas::Snssai;

namespace {

/// Random valid message generator for the roundtrip property.
NasMessage random_message(sim::RngStream& rng) {
  auto random_snssai_list = [&rng](unsigned max_len) {
    std::vector<Snssai> out;
    auto len = static_cast<unsigned>(rng.uniform_int(0, max_len));
    for (unsigned i = 0; i < len; ++i) {
      Snssai s;
      s.sst = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
      if (rng.uniform01() < 0.7) {
        s.sd = static_cast<std::uint32_t>(rng.uniform_int(0, nas::kSdMax));
      }
      out.push_back(s);
    }
    return out;
  };
  auto random_supi = [&rng] {
    std::string s;
    for (int i = 0; i < 15; ++i) {
      s.push_back(static_cast<char>('0' + rng.uniform_int(0, 9)));
    }
    return s;
  };

  switch (rng.uniform_int(0, 4)) {
    case 0: {
      std::optional<std::string> supi;
      std::optional<Bytes> suci;
      if (rng.uniform01() < 0.5) {
        supi = random_supi();
      } else if (rng.uniform01() < 0.5) {
        suci = sim::RngStream(rng.next_u64(), "suci").bytes(15);
      }
      std::optional<std::vector<Snssai>> nssai;
      if (rng.uniform01() < 0.8) nssai = random_snssai_list(5);
      return nas::make_registration_request(supi, suci, nssai);
    }
    case 1: {
      sim::RngStream body(rng.next_u64(), "autn");
      return nas::make_authentication_request(body.bytes(16), body.bytes(2));
    }
    case 2:
      return nas::make_security_mode_command(
          static_cast<std::uint8_t>(rng.uniform_int(0, 15)),
          static_cast<std::uint8_t>(rng.uniform_int(0, 15)));
    case 3: {
      std::optional<std::vector<Snssai>> nssai = random_snssai_list(4);
      return nas::make_security_mode_complete(
          nas::make_registration_request(random_supi(), std::nullopt, nssai));
    }
    default:
      return nas::make_registration_accept(random_snssai_list(4),
                                           random_snssai_list(3));
  }
}

}  // namespace

TEST_CASE("S-NSSAI with SD encodes as sst + 3 SD octets big-endian") {
  // Entry layout inside a list field: length octet then value.
  Bytes field = nas::encode_requested_nssai_field({Snssai{1, 0x010203}});
  // tag, field-length, count, entry-length, sst, sd[3]
  CHECK(field == Bytes{0x03, 0x06, 0x01, 0x04, 0x01, 0x01, 0x02, 0x03});
}

TEST_CASE("S-NSSAI without SD encodes as a single value octet") {
  Bytes field = nas::encode_requested_nssai_field({Snssai{1, std::nullopt}});
  CHECK(field == Bytes{0x03, 0x03, 0x01, 0x01, 0x01});
}

TEST_CASE("registration request roundtrips") {
  NasMessage m = nas::make_registration_request(
      "001010000000001", std::nullopt,
      std::vector<Snssai>{Snssai{1, 0x000001}});
  CHECK(nas::decode(nas::encode(m)) == m);
}

TEST_CASE("decode(encode(m)) == m over generated messages") {
  sim::RngStream rng(20240901, "codec.roundtrip");
  for (int i = 0; i < 500; ++i) {
    NasMessage m = random_message(rng);
    CAPTURE(i);
    NasMessage back = nas::decode(nas::encode(m));
    CHECK(back == m);
  }
}

TEST_CASE("truncated input is rejected") {
  NasMessage m = nas::make_registration_request(
      "001010000000001", std::nullopt,
      std::vector<Snssai>{Snssai{1, 0x000001}});
  Bytes octets = nas::encode(m);
  for (std::size_t cut = 2; cut < octets.size(); ++cut) {
    BytesView prefix(octets.data(), cut);
    CHECK_THROWS_AS(nas::decode(prefix), CodecError);
  }
}

TEST_CASE("a field foreign to the kind is a KindFieldMismatch") {
  // allowed_nssai (tag 0x09) smuggled into a RegistrationRequest.
  Bytes octets{0x01, 0x09, 0x03, 0x01, 0x01, 0x02};
  try {
    nas::decode(octets);
    FAIL("expected CodecError");
  } catch (const CodecError& e) {
    CHECK(e.kind() == CodecError::Kind::KindFieldMismatch);
  }
}

TEST_CASE("duplicate fields are rejected") {
  NasMessage m = nas::make_registration_request("001010000000001",
                                                std::nullopt, std::nullopt);
  Bytes octets = nas::encode(m);
  // Append a second supi field.
  Bytes dup(octets.begin() + 1, octets.end());
  octets.insert(octets.end(), dup.begin(), dup.end());
  try {
    nas::decode(octets);
    FAIL("expected CodecError");
  } catch (const CodecError& e) {
    CHECK(e.kind() == CodecError::Kind::DuplicateField);
  }
}

TEST_CASE("unknown tags and kinds are rejected") {
  try {
    nas::decode(Bytes{0x07});
    FAIL("expected CodecError");
  } catch (const CodecError& e) {
    CHECK(e.kind() == CodecError::Kind::UnknownTag);
  }
  try {
    nas::decode(Bytes{0x01, 0x7f, 0x00});
    FAIL("expected CodecError");
  } catch (const CodecError& e) {
    CHECK(e.kind() == CodecError::Kind::UnknownTag);
  }
}

TEST_CASE("invariant-violating messages do not encode") {
  NasMessage m;
  m.kind = MessageKind::SecurityModeComplete;  // embedded_request missing
  CHECK_THROWS_AS(nas::encode(m), CodecError);

  NasMessage accept_with_request =
      nas::make_registration_accept({Snssai{1, 0x010203}}, {});
  accept_with_request.requested_nssai = std::vector<Snssai>{Snssai{2, {}}};
  CHECK_THROWS_AS(nas::encode(accept_with_request), CodecError);
}

TEST_CASE("embedded request only fits SecurityModeComplete") {
  NasMessage m = nas::make_registration_request("001010000000001",
                                                std::nullopt, std::nullopt);
  m.embedded_request = nas::MessageBox(nas::make_registration_request(
      "001010000000002", std::nullopt, std::nullopt));
  CHECK_THROWS_AS(nas::encode(m), CodecError);
}

TEST_CASE("snssai text forms parse and format") {
  CHECK(nas::parse_snssai("1/0x010203") == Snssai{1, 0x010203});
  CHECK(nas::parse_snssai("2") == Snssai{2, std::nullopt});
  CHECK(nas::parse_snssai("1/16777216") == std::nullopt);  // sd > 24 bits
  CHECK(nas::parse_snssai("256/1") == std::nullopt);
  CHECK(nas::format_snssai(Snssai{1, 0xffffff}) == "SST:1 SD:0xffffff");
  CHECK(nas::format_snssai_compact(Snssai{3, std::nullopt}) == "3");
}
