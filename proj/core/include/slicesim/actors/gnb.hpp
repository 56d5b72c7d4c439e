#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicesim/actors/transport.hpp"
#include "slicesim/keys/observer.hpp"

namespace slicesim::actors {

/// Faithful relay between its attached UEs and the AMF.
class GnbActor : public NasNode {
 public:
  GnbActor(Fabric& fabric, std::string gnb_id, std::string amf_id = "amf");

  void receive(const Envelope& env) override;
  const std::string& node_id() const override { return gnb_id_; }

 protected:
  void forward_uplink(Envelope env);
  void forward_downlink(Envelope env);

  Fabric& fabric_;
  std::string gnb_id_;
  std::string amf_id_;
};

struct ManipulationStrategy {
  enum class Kind { PassThrough, EraseSd, ReplaceNssai, StripNssai };
  Kind kind = Kind::PassThrough;
  std::vector<nas::Snssai> replacement;  // ReplaceNssai target
};

/// The strategy as a value transform on a Requested NSSAI field.
std::optional<std::vector<nas::Snssai>> apply_strategy(
    const ManipulationStrategy& strategy,
    const std::optional<std::vector<nas::Snssai>>& current);

enum class KnowledgeMode { None, NullIntegrityNetwork, LeakedRoot };

struct InterceptRecord {
  enum class Action { Forwarded, Rewritten, Blocked };
  enum class BlockReason { None, Unreadable, NoForgeKey };
  sim::SimTime time = 0;
  nas::MessageKind kind = nas::MessageKind::RegistrationRequest;
  Action action = Action::Forwarded;
  BlockReason reason = BlockReason::None;
};

/// One on-path manipulation step. Updates the observer from whatever the
/// unit exposes, then rewrites the Requested NSSAI per strategy when it can:
/// plaintext requests unconditionally, protected ones only when the payload
/// is readable (null cipher) and a forge capability exists to restamp the
/// mac. Blocked manipulations forward the unit unmodified and say why.
InterceptRecord rogue_intercept(TransportUnit& unit,
                                const ManipulationStrategy& strategy,
                                keys::ParamObserver& observer,
                                const keys::AttackerKnowledge& knowledge,
                                sim::SimTime now);

/// Per-UE reconnaissance summary assembled from plaintext sightings.
struct ReconUeEntry {
  std::string ue_id;
  std::optional<std::string> supi;
  std::vector<nas::Snssai> requested;
  std::vector<std::string> purpose_tags;
};
struct ReconRecord {
  std::vector<ReconUeEntry> entries;
  std::map<std::uint8_t, unsigned> population_by_sst;
  std::vector<std::string> summary_lines;  // e.g. "mMTC population: 10"
};

/// Man-in-the-middle base station. Impersonates `gnb_id` toward the core,
/// relays NAS traffic, observes what the configured ciphering leaves
/// readable, and applies its manipulation strategy to slice requests.
class RogueGnbActor : public GnbActor {
 public:
  using RootKeySource =
      std::function<std::optional<keys::KnowledgeLeakedRoot>(
          const std::string& ue_id)>;

  RogueGnbActor(Fabric& fabric, std::string gnb_id, std::string snn,
                ManipulationStrategy strategy, KnowledgeMode knowledge,
                std::string amf_id = "amf");

  /// Supplies the leaked (CK, IK) pair per UE when knowledge mode is
  /// LeakedRoot.
  void set_root_key_source(RootKeySource source) {
    root_keys_ = std::move(source);
  }

  void receive(const Envelope& env) override;

  const std::vector<InterceptRecord>& intercept_log() const {
    return intercepts_;
  }
  const keys::ObservedParams* observed(const std::string& ue_id) const;
  ReconRecord recon_report() const;

 private:
  keys::ParamObserver& observer_for(const std::string& ue_id);
  keys::AttackerKnowledge knowledge_for(const std::string& ue_id) const;

  std::string snn_;
  ManipulationStrategy strategy_;
  KnowledgeMode knowledge_mode_;
  RootKeySource root_keys_;
  std::map<std::string, keys::ParamObserver> observers_;  // by ue_id
  std::vector<InterceptRecord> intercepts_;
};

}  // namespace slicesim::actors
