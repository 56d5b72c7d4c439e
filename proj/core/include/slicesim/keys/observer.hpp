#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slicesim/keys/chain.hpp"
#include "slicesim/nas/security.hpp"
#include "slicesim/nas/snssai.hpp"

namespace slicesim::keys {

/// Everything an on-path eavesdropper has managed to read for one UE.
/// Fields are set only from octets the observer could actually decode:
/// pre-security plaintext, or secured payloads sent under the null cipher.
struct ObservedParams {
  std::optional<std::string> snn;
  std::optional<std::string> supi;
  std::optional<Bytes> abba;
  std::optional<IntegrityAlg> aid;
  std::optional<Bytes> autn;
  bool saw_plaintext_nssai = false;
  std::optional<std::vector<nas::Snssai>> requested_nssai_seen;
};

/// What the attacker brings beyond passive observation. The observable NAS
/// parameters alone never yield a key; every KDF step also chains from the
/// secret (CK, IK) root, so deriving K_NASint additionally requires a leaked
/// root pair. A network running null integrity needs no key at all.
struct KnowledgeNone {};
struct KnowledgeNullIntegrityNetwork {};
struct KnowledgeLeakedRoot {
  Bytes ck;
  Bytes ik;
};
using AttackerKnowledge = std::variant<KnowledgeNone,
                                       KnowledgeNullIntegrityNetwork,
                                       KnowledgeLeakedRoot>;

/// A way to stamp a passing-verification MAC on a forged PDU.
struct ForgeCapability {
  enum class Kind {
    ZeroMac,      // network runs NIA0, any PDU with mac=0 verifies
    DerivedKey,   // attacker holds a K_NASint equal to the network's
  };
  Kind kind = Kind::ZeroMac;
  Bytes k_nasint;  // set for DerivedKey

  std::uint32_t mac_for(std::uint32_t count, Direction direction,
                        BytesView payload) const;
};

struct AttackerDerivation {
  std::optional<ForgeCapability> capability;
  std::vector<std::string> missing;  // parameter names that blocked derivation
};

/// Runs the same chain the network runs, over observed parameters. Succeeds
/// exactly when the knowledge mode supplies the root secret and all of
/// {snn, autn, supi, abba, aid} were observed; NullIntegrityNetwork yields
/// the zero-mac capability without any parameters.
AttackerDerivation attacker_derive(const ObservedParams& obs,
                                   const AttackerKnowledge& knowledge);

/// Link-tap accumulator feeding ObservedParams from messages on the radio
/// interface. The serving network name is broadcast, so it is known from
/// construction.
class ParamObserver {
 public:
  explicit ParamObserver(std::string snn) { params_.snn = std::move(snn); }

  /// A pre-security plaintext NAS message.
  void on_plaintext(const nas::NasMessage& msg);

  /// A secured PDU. Only EA0 payloads can be parsed; anything else leaves
  /// the observations untouched.
  void on_secured(const nas::SecuredPdu& pdu);

  const ObservedParams& params() const { return params_; }

 private:
  ObservedParams params_;
};

}  // namespace slicesim::keys
