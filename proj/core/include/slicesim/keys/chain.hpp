#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicesim/common/bytes.hpp"
#include "slicesim/keys/algorithms.hpp"
#include "slicesim/keys/kdf.hpp"

namespace slicesim::keys {

/// Algorithm-type distinguisher for NAS integrity key derivation.
inline constexpr std::uint8_t kAlgTypeNasInt = 0x02;

/// KDF function codes along the chain, in derivation order.
inline constexpr std::uint8_t kFcAusf = 0x6A;
inline constexpr std::uint8_t kFcSeaf = 0x6C;
inline constexpr std::uint8_t kFcAmf = 0x6D;
inline constexpr std::uint8_t kFcNasInt = 0x69;

/// Full key chain from the authentication pair (CK, IK) down to the 128-bit
/// NAS integrity key. K_NASint is the least-significant (trailing) 16 octets
/// of the 32-octet KDF output.
struct KeyMaterial {
  Bytes ck;        // 16 octets
  Bytes ik;        // 16 octets
  Bytes k_ausf;    // 32 octets
  Bytes k_seaf;    // 32 octets
  Bytes k_amf;     // 32 octets
  Bytes k_nasint;  // 16 octets

  friend bool operator==(const KeyMaterial&, const KeyMaterial&) = default;
};

/// Inputs to the chain. Optionals so that partially observed parameter sets
/// (the attacker path) report exactly which inputs are missing.
struct DerivationInputs {
  std::optional<std::string> snn;   // serving network name
  std::optional<std::string> supi;  // subscriber identifier digits
  std::optional<Bytes> abba;        // 2 octets
  std::optional<IntegrityAlg> aid;
  std::optional<Bytes> autn;        // 16 octets; first 6 feed the 0x6A step
};

class MissingInputError : public std::runtime_error {
 public:
  explicit MissingInputError(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

// Chain, with kdf(key, fc, params) as the single primitive:
//   K_AUSF   = kdf(CK || IK, 0x6A, [SNN, AUTN[0..6)])
//   K_SEAF   = kdf(K_AUSF,   0x6C, [SNN])
//   K_AMF    = kdf(K_SEAF,   0x6D, [SUPI, ABBA])
//   K_NASint = LSB-16( kdf(K_AMF, 0x69, [0x02, AID]) )
/// Throws MissingInputError listing every absent field.
KeyMaterial derive_chain(BytesView ck, BytesView ik,
                         const DerivationInputs& inputs);

/// 32-bit NAS MAC: the 32 most-significant bits of
/// HMAC-SHA-256(k_nasint, count_be4 || dir || bearer || payload) under
/// NIA2-sim, and zero under NIA0 regardless of inputs.
std::uint32_t compute_mac(BytesView k_nasint, std::uint32_t count,
                          Direction direction, std::string_view bearer,
                          BytesView payload, IntegrityAlg aid);

/// Serving network name from the scenario PLMN digits:
/// "5G:mnc<MNC>.mcc<MCC>.3gppnetwork.org".
std::string build_snn(const std::string& mcc, const std::string& mnc);

/// Authentication stub: both sides derive the session pair (CK, IK) from
/// the subscriber's long-term secret and the 16-octet RAND carried in AUTN.
struct CkIk {
  Bytes ck;
  Bytes ik;
};
CkIk derive_ck_ik(BytesView long_term_key, BytesView rand);

/// Concealed identifier: an opaque 15-octet token keyed by the home-network
/// secret. Resolvable network-side by table lookup, opaque to observers.
Bytes conceal_supi(BytesView home_network_key, const std::string& supi);

}  // namespace slicesim::keys
