#include "slicesim/keys/observer.hpp"

namespace slicesim::keys {

std::uint32_t ForgeCapability::mac_for(std::uint32_t count,
                                       Direction direction,
                                       BytesView payload) const {
  if (kind == Kind::ZeroMac) return 0;
  return compute_mac(k_nasint, count, direction, kBearer, payload,
                     IntegrityAlg::Nia2Sim);
}

AttackerDerivation attacker_derive(const ObservedParams& obs,
                                   const AttackerKnowledge& knowledge) {
  AttackerDerivation out;
  if (std::holds_alternative<KnowledgeNone>(knowledge)) {
    return out;  // no root secret, observation alone is insufficient
  }
  if (std::holds_alternative<KnowledgeNullIntegrityNetwork>(knowledge)) {
    out.capability = ForgeCapability{ForgeCapability::Kind::ZeroMac, {}};
    return out;
  }

  const auto& root = std::get<KnowledgeLeakedRoot>(knowledge);
  DerivationInputs inputs;
  inputs.snn = obs.snn;
  inputs.supi = obs.supi;
  inputs.abba = obs.abba;
  inputs.aid = obs.aid;
  inputs.autn = obs.autn;
  try {
    KeyMaterial km = derive_chain(root.ck, root.ik, inputs);
    out.capability =
        ForgeCapability{ForgeCapability::Kind::DerivedKey, km.k_nasint};
  } catch (const MissingInputError& e) {
    out.missing = e.missing();
  }
  return out;
}

void ParamObserver::on_plaintext(const nas::NasMessage& msg) {
  switch (msg.kind) {
    case nas::MessageKind::RegistrationRequest:
      if (msg.supi) params_.supi = *msg.supi;  // concealed forms stay opaque
      if (msg.requested_nssai) {
        params_.saw_plaintext_nssai = true;
        params_.requested_nssai_seen = *msg.requested_nssai;
      }
      break;
    case nas::MessageKind::AuthenticationRequest:
      if (msg.autn) params_.autn = *msg.autn;
      if (msg.abba) params_.abba = *msg.abba;
      break;
    case nas::MessageKind::SecurityModeCommand:
      if (msg.selected_integrity_aid) {
        params_.aid = static_cast<IntegrityAlg>(*msg.selected_integrity_aid);
      }
      break;
    case nas::MessageKind::SecurityModeComplete:
      if (msg.embedded_request) on_plaintext(**msg.embedded_request);
      break;
    case nas::MessageKind::RegistrationAccept:
      break;
  }
}

void ParamObserver::on_secured(const nas::SecuredPdu& pdu) {
  if (pdu.header.cipher_eid != CipherAlg::Ea0) return;
  try {
    on_plaintext(nas::decode(pdu.payload));
  } catch (const nas::CodecError&) {
    // Unparseable octets contribute nothing.
  }
}

}  // namespace slicesim::keys
