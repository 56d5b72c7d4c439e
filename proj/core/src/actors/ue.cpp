#include "slicesim/actors/ue.hpp"

namespace slicesim::actors {

UeActor::UeActor(Fabric& fabric, UeProfile profile, Bytes long_term_key,
                 Bytes home_network_key, std::string snn, std::string gnb_id)
    : id_("ue." + profile.supi),
      fabric_(fabric),
      profile_(std::move(profile)),
      long_term_key_(std::move(long_term_key)),
      home_network_key_(std::move(home_network_key)),
      snn_(std::move(snn)),
      gnb_id_(std::move(gnb_id)) {
  fabric_.register_node(*this);
}

nas::NasMessage UeActor::build_registration_request() const {
  std::optional<std::string> supi;
  std::optional<Bytes> suci;
  if (profile_.conceal_supi) {
    suci = keys::conceal_supi(home_network_key_, profile_.supi);
  } else {
    supi = profile_.supi;
  }
  std::optional<std::vector<nas::Snssai>> nssai;
  if (!profile_.preferred_nssai.empty()) nssai = profile_.preferred_nssai;
  return nas::make_registration_request(std::move(supi), std::move(suci),
                                        std::move(nssai));
}

void UeActor::start_registration(sim::SimTime at, sim::SimTime timeout) {
  fabric_.loop().schedule(at, id_ + ".register", [this]() {
    state_ = UeState::WaitingAuth;
    fabric_.send_radio(Envelope{id_, gnb_id_, id_, keys::Direction::Uplink,
                                PlainPdu{nas::encode(
                                    build_registration_request())}});
  });
  fabric_.loop().schedule(at + timeout, id_ + ".timeout", [this]() {
    if (state_ != UeState::Registered && state_ != UeState::Failed) {
      state_ = UeState::Failed;
      RegistrationOutcome out;
      out.failure = "timeout";
      out.completed_at = fabric_.loop().now();
      outcome_ = std::move(out);
    }
  });
}

void UeActor::receive(const Envelope& env) {
  if (const auto* plain = std::get_if<PlainPdu>(&env.unit)) {
    nas::NasMessage m;
    try {
      m = nas::decode(plain->octets);
    } catch (const nas::CodecError&) {
      return;
    }
    if (m.kind == nas::MessageKind::AuthenticationRequest &&
        state_ == UeState::WaitingAuth) {
      on_authentication_request(m);
    }
    return;
  }
  on_secured(std::get<nas::SecuredPdu>(env.unit));
}

void UeActor::on_authentication_request(const nas::NasMessage& m) {
  if (m.autn->size() != 16) {
    state_ = UeState::Failed;
    RegistrationOutcome out;
    out.failure = "auth failure";
    out.completed_at = fabric_.loop().now();
    outcome_ = std::move(out);
    return;
  }
  autn_ = *m.autn;
  abba_ = *m.abba;
  ckik_ = keys::derive_ck_ik(long_term_key_, autn_);
  state_ = UeState::WaitingSmc;
}

void UeActor::on_secured(const nas::SecuredPdu& pdu) {
  if (state_ == UeState::WaitingSmc) {
    // The command itself is unciphered; parse it to learn the selected
    // algorithms, derive the context, then verify the command's own mac.
    nas::NasMessage m;
    try {
      m = nas::decode(pdu.payload);
    } catch (const nas::CodecError&) {
      return;
    }
    if (m.kind != nas::MessageKind::SecurityModeCommand) return;

    keys::DerivationInputs inputs;
    inputs.snn = snn_;
    inputs.supi = profile_.supi;
    inputs.abba = abba_;
    inputs.aid = static_cast<keys::IntegrityAlg>(*m.selected_integrity_aid);
    inputs.autn = autn_;
    keys::KeyMaterial km = keys::derive_chain(ckik_.ck, ckik_.ik, inputs);

    ctx_ = nas::SecurityContext{};
    ctx_.k_nasint = km.k_nasint;
    ctx_.cipher = static_cast<keys::CipherAlg>(*m.selected_cipher_eid);
    ctx_.integrity = static_cast<keys::IntegrityAlg>(*m.selected_integrity_aid);
    try {
      (void)nas::verify_and_open(pdu, ctx_, keys::Direction::Downlink);
    } catch (const nas::SecurityError&) {
      return;  // forged command, stay waiting
    }

    // Re-send the registration request under the fresh context, embedded in
    // SECURITY MODE COMPLETE (the first protected uplink, count 0).
    nas::NasMessage smc =
        nas::make_security_mode_complete(build_registration_request());
    nas::SecuredPdu out =
        nas::apply_security(smc, ctx_, keys::Direction::Uplink);
    state_ = UeState::WaitingAccept;
    fabric_.send_radio(
        Envelope{id_, gnb_id_, id_, keys::Direction::Uplink, out});
    return;
  }

  if (state_ == UeState::WaitingAccept) {
    nas::NasMessage m;
    try {
      m = nas::verify_and_open(pdu, ctx_, keys::Direction::Downlink);
    } catch (const nas::SecurityError&) {
      return;
    }
    if (m.kind != nas::MessageKind::RegistrationAccept) return;

    // No attestation exists; the Accept contents are believed as-is.
    RegistrationOutcome out;
    out.believed_allowed = m.allowed_nssai.value_or(std::vector<nas::Snssai>{});
    out.believed_rejected =
        m.rejected_nssai.value_or(std::vector<nas::Snssai>{});
    out.completed_at = fabric_.loop().now();
    outcome_ = std::move(out);
    state_ = UeState::Registered;
  }
}

}  // namespace slicesim::actors
