#include "slicesim/keys/chain.hpp"

namespace slicesim::keys {

const char* integrity_alg_name(IntegrityAlg a) {
  switch (a) {
    case IntegrityAlg::Nia0:
      return "NIA0";
    case IntegrityAlg::Nia2Sim:
      return "NIA2sim";
  }
  return "?";
}

const char* cipher_alg_name(CipherAlg a) {
  switch (a) {
    case CipherAlg::Ea0:
      return "EA0";
    case CipherAlg::Ea2Sim:
      return "EA2sim";
  }
  return "?";
}

const char* direction_name(Direction d) {
  return d == Direction::Uplink ? "uplink" : "downlink";
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ", ";
    out += parts[i];
  }
  return out;
}

}  // namespace

MissingInputError::MissingInputError(std::vector<std::string> missing)
    : std::runtime_error("derivation inputs missing: " + join(missing)),
      missing_(std::move(missing)) {}

KeyMaterial derive_chain(BytesView ck, BytesView ik,
                         const DerivationInputs& inputs) {
  std::vector<std::string> missing;
  if (!inputs.snn) missing.push_back("snn");
  if (!inputs.supi) missing.push_back("supi");
  if (!inputs.abba) missing.push_back("abba");
  if (!inputs.aid) missing.push_back("aid");
  if (!inputs.autn) missing.push_back("autn");
  if (!missing.empty()) throw MissingInputError(std::move(missing));
  if (inputs.autn->size() < 6) {
    throw MissingInputError({"autn (shorter than 6 octets)"});
  }

  KeyMaterial km;
  km.ck.assign(ck.begin(), ck.end());
  km.ik.assign(ik.begin(), ik.end());

  Bytes root = km.ck;
  append(root, km.ik);

  Bytes snn = to_bytes(*inputs.snn);
  Bytes autn_token(inputs.autn->begin(), inputs.autn->begin() + 6);
  Digest k_ausf = kdf(root, kFcAusf, {snn, autn_token});
  km.k_ausf.assign(k_ausf.begin(), k_ausf.end());

  Digest k_seaf = kdf(km.k_ausf, kFcSeaf, {snn});
  km.k_seaf.assign(k_seaf.begin(), k_seaf.end());

  Digest k_amf =
      kdf(km.k_seaf, kFcAmf, {to_bytes(*inputs.supi), *inputs.abba});
  km.k_amf.assign(k_amf.begin(), k_amf.end());

  Digest k_nasint_full =
      kdf(km.k_amf, kFcNasInt,
          {Bytes{kAlgTypeNasInt},
           Bytes{static_cast<std::uint8_t>(*inputs.aid)}});
  km.k_nasint.assign(k_nasint_full.begin() + 16, k_nasint_full.end());
  return km;
}

std::uint32_t compute_mac(BytesView k_nasint, std::uint32_t count,
                          Direction direction, std::string_view bearer,
                          BytesView payload, IntegrityAlg aid) {
  if (aid == IntegrityAlg::Nia0) return 0;
  Bytes msg;
  msg.reserve(5 + bearer.size() + payload.size());
  put_u32_be(msg, count);
  msg.push_back(static_cast<std::uint8_t>(direction));
  msg.insert(msg.end(), bearer.begin(), bearer.end());
  append(msg, payload);
  Digest d = hmac_sha256(k_nasint, msg);
  return (static_cast<std::uint32_t>(d[0]) << 24) |
         (static_cast<std::uint32_t>(d[1]) << 16) |
         (static_cast<std::uint32_t>(d[2]) << 8) |
         static_cast<std::uint32_t>(d[3]);
}

std::string build_snn(const std::string& mcc, const std::string& mnc) {
  return "5G:mnc" + mnc + ".mcc" + mcc + ".3gppnetwork.org";
}

CkIk derive_ck_ik(BytesView long_term_key, BytesView rand) {
  Bytes ck_input = to_bytes("ck");
  append(ck_input, rand);
  Bytes ik_input = to_bytes("ik");
  append(ik_input, rand);
  Digest ck_full = hmac_sha256(long_term_key, ck_input);
  Digest ik_full = hmac_sha256(long_term_key, ik_input);
  return CkIk{Bytes(ck_full.begin(), ck_full.begin() + 16),
              Bytes(ik_full.begin(), ik_full.begin() + 16)};
}

Bytes conceal_supi(BytesView home_network_key, const std::string& supi) {
  Digest d = hmac_sha256(home_network_key, to_bytes(supi));
  return Bytes(d.begin(), d.begin() + 15);
}

}  // namespace slicesim::keys
