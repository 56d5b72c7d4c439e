#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicesim/actors/log.hpp"
#include "slicesim/actors/transport.hpp"
#include "slicesim/sim/rng.hpp"

namespace slicesim::actors {

struct AmfConfig {
  std::vector<nas::Snssai> configured_slices;
  nas::Snssai default_snssai;
  std::map<std::string, std::vector<nas::Snssai>> subscription_db;
  std::map<std::string, Bytes> subscriber_keys;  // long-term secrets
  keys::CipherAlg nas_cipher_policy = keys::CipherAlg::Ea0;
  keys::IntegrityAlg integrity_policy = keys::IntegrityAlg::Nia2Sim;
  std::map<std::string, std::vector<nas::Snssai>> gnb_allowlists;
  Bytes home_network_key;  // resolves concealed identifiers
  std::string snn;
  Bytes abba{0x00, 0x00};

  bool is_configured(const nas::Snssai& s) const;
  bool is_subscribed(const std::string& supi, const nas::Snssai& s) const;
  /// True when the gNB has no allow-list or the slice is on it.
  bool is_served(const std::string& gnb_id, const nas::Snssai& s) const;
  /// The slice an SST-only request resolves to: the network default when it
  /// has this SST, otherwise the lowest-SD configured slice of the SST.
  std::optional<nas::Snssai> default_for_sst(std::uint8_t sst) const;
};

class UnknownSupiError : public std::runtime_error {
 public:
  explicit UnknownSupiError(const std::string& supi)
      : std::runtime_error("unknown subscriber " + supi) {}
};

struct SliceSelection {
  std::vector<nas::Snssai> allowed;
  std::vector<nas::Snssai> rejected;
};

/// Partitions a Requested NSSAI into Allowed and Rejected lists.
/// Exact (sst, sd) entries must be configured, subscribed and served by the
/// gNB; SST-only entries resolve to the default slice of that SST; anything
/// else is rejected. An empty or fully rejected request falls back to the
/// network default, so rejection never costs connectivity. Duplicates keep
/// their first occurrence. Throws UnknownSupiError for unknown subscribers.
SliceSelection select_slices(const std::vector<nas::Snssai>& requested,
                             const std::string& supi,
                             const std::string& gnb_id, const AmfConfig& cfg);

/// Final registration record kept on the network side.
struct AmfRegistrationRecord {
  std::string supi;
  std::string gnb_id;
  std::vector<nas::Snssai> requested;  // from the verified embedded request
  SliceSelection selection;
};

/// AMF state machine: answers initial requests with the authentication
/// challenge, establishes the NAS security context, verifies the protected
/// SECURITY MODE COMPLETE and makes the slice decision from its embedded
/// request.
class AmfActor : public NasNode {
 public:
  AmfActor(Fabric& fabric, AmfConfig config, AmfLog& log, std::uint64_t seed);

  void receive(const Envelope& env) override;
  const std::string& node_id() const override { return id_; }

  const std::map<std::string, AmfRegistrationRecord>& registrations() const {
    return registrations_;
  }
  const AmfConfig& config() const { return config_; }

 private:
  struct Session {
    std::string supi;
    std::string gnb_id;
    Bytes rand;
    nas::SecurityContext ctx;
    bool smc_sent = false;
    bool complete = false;
  };

  void on_registration_request(const Envelope& env, const nas::NasMessage& m);
  void on_security_mode_complete(const Envelope& env,
                                 const nas::SecuredPdu& pdu);
  std::optional<std::string> resolve_identity(const nas::NasMessage& m) const;

  std::string id_ = "amf";
  Fabric& fabric_;
  AmfConfig config_;
  AmfLog& log_;
  std::uint64_t seed_;
  std::map<std::string, Session> sessions_;  // by ue_id
  std::map<std::string, AmfRegistrationRecord> registrations_;  // by supi
};

}  // namespace slicesim::actors
