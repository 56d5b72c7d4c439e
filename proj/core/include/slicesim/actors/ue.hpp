#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicesim/actors/transport.hpp"

namespace slicesim::actors {

struct UeProfile {
  std::string supi;  // 15 digits
  std::vector<nas::Snssai> subscribed_nssai;
  std::vector<nas::Snssai> preferred_nssai;  // what it requests
  bool conceal_supi = false;
  std::string traffic_profile_ref;
};

enum class UeState {
  Idle,
  WaitingAuth,
  WaitingSmc,
  WaitingAccept,
  Registered,
  Failed,
};

/// What the UE ends up believing. There is no attested feedback channel in
/// the protocol, so `believed_allowed` is always exactly the Accept
/// contents.
struct RegistrationOutcome {
  std::vector<nas::Snssai> believed_allowed;
  std::vector<nas::Snssai> believed_rejected;
  sim::SimTime completed_at = 0;
  std::string failure;  // empty on success ("timeout", "auth failure")
};

/// UE side of the registration flow: plaintext initial request, key
/// derivation from the authentication challenge, context activation from
/// SECURITY MODE COMMAND, the request re-sent inside SECURITY MODE
/// COMPLETE, and blind acceptance of the Accept.
class UeActor : public NasNode {
 public:
  UeActor(Fabric& fabric, UeProfile profile, Bytes long_term_key,
          Bytes home_network_key, std::string snn, std::string gnb_id);

  /// Schedules the initial REGISTRATION REQUEST at `at` and a registration
  /// timeout after `timeout`.
  void start_registration(sim::SimTime at, sim::SimTime timeout = 10'000'000);

  void receive(const Envelope& env) override;
  const std::string& node_id() const override { return id_; }

  UeState state() const { return state_; }
  const UeProfile& profile() const { return profile_; }
  const std::optional<RegistrationOutcome>& outcome() const { return outcome_; }
  const nas::SecurityContext& security_context() const { return ctx_; }

  /// The authentication-session key pair, once derived. Exposed so a
  /// scenario can hand a compromised root to the attacker.
  const keys::CkIk& session_keys() const { return ckik_; }

 private:
  nas::NasMessage build_registration_request() const;
  void on_authentication_request(const nas::NasMessage& m);
  void on_secured(const nas::SecuredPdu& pdu);

  std::string id_;
  Fabric& fabric_;
  UeProfile profile_;
  Bytes long_term_key_;
  Bytes home_network_key_;
  std::string snn_;
  std::string gnb_id_;

  UeState state_ = UeState::Idle;
  Bytes autn_;
  Bytes abba_;
  keys::CkIk ckik_;
  nas::SecurityContext ctx_;
  std::optional<RegistrationOutcome> outcome_;
};

}  // namespace slicesim::actors
