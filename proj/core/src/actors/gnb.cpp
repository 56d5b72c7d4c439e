#include "slicesim/actors/gnb.hpp"

#include <algorithm>

namespace slicesim::actors {

GnbActor::GnbActor(Fabric& fabric, std::string gnb_id, std::string amf_id)
    : fabric_(fabric), gnb_id_(std::move(gnb_id)), amf_id_(std::move(amf_id)) {
  fabric_.register_node(*this);
}

void GnbActor::forward_uplink(Envelope env) {
  env.from = gnb_id_;
  env.to = amf_id_;
  fabric_.send_backhaul(std::move(env));
}

void GnbActor::forward_downlink(Envelope env) {
  env.from = gnb_id_;
  env.to = env.ue_id;
  fabric_.send_radio(std::move(env));
}

void GnbActor::receive(const Envelope& env) {
  if (env.direction == keys::Direction::Uplink) {
    forward_uplink(env);
  } else {
    forward_downlink(env);
  }
}

std::optional<std::vector<nas::Snssai>> apply_strategy(
    const ManipulationStrategy& strategy,
    const std::optional<std::vector<nas::Snssai>>& current) {
  switch (strategy.kind) {
    case ManipulationStrategy::Kind::PassThrough:
      return current;
    case ManipulationStrategy::Kind::StripNssai:
      return std::nullopt;
    case ManipulationStrategy::Kind::ReplaceNssai:
      return strategy.replacement;
    case ManipulationStrategy::Kind::EraseSd: {
      if (!current) return current;
      std::vector<nas::Snssai> out;
      for (const auto& s : *current) {
        out.push_back(nas::Snssai{s.sst, std::nullopt});
      }
      return out;
    }
  }
  return current;
}

InterceptRecord rogue_intercept(TransportUnit& unit,
                                const ManipulationStrategy& strategy,
                                keys::ParamObserver& observer,
                                const keys::AttackerKnowledge& knowledge,
                                sim::SimTime now) {
  InterceptRecord rec;
  rec.time = now;

  if (auto* plain = std::get_if<PlainPdu>(&unit)) {
    nas::NasMessage m;
    try {
      m = nas::decode(plain->octets);
    } catch (const nas::CodecError&) {
      return rec;
    }
    observer.on_plaintext(m);
    rec.kind = m.kind;
    if (m.kind == nas::MessageKind::RegistrationRequest &&
        strategy.kind != ManipulationStrategy::Kind::PassThrough) {
      m.requested_nssai = apply_strategy(strategy, m.requested_nssai);
      plain->octets = nas::encode(m);
      rec.action = InterceptRecord::Action::Rewritten;
    }
    return rec;
  }

  auto& pdu = std::get<nas::SecuredPdu>(unit);
  observer.on_secured(pdu);
  if (strategy.kind == ManipulationStrategy::Kind::PassThrough) return rec;

  if (pdu.header.cipher_eid != keys::CipherAlg::Ea0) {
    rec.action = InterceptRecord::Action::Blocked;
    rec.reason = InterceptRecord::BlockReason::Unreadable;
    return rec;
  }
  nas::NasMessage m;
  try {
    m = nas::decode(pdu.payload);
  } catch (const nas::CodecError&) {
    rec.action = InterceptRecord::Action::Blocked;
    rec.reason = InterceptRecord::BlockReason::Unreadable;
    return rec;
  }
  rec.kind = m.kind;
  if (m.kind != nas::MessageKind::SecurityModeComplete) return rec;

  keys::AttackerDerivation derivation =
      keys::attacker_derive(observer.params(), knowledge);
  if (!derivation.capability) {
    rec.action = InterceptRecord::Action::Blocked;
    rec.reason = InterceptRecord::BlockReason::NoForgeKey;
    return rec;
  }

  NasMessage& embedded = **m.embedded_request;
  embedded.requested_nssai =
      apply_strategy(strategy, embedded.requested_nssai);
  pdu.payload = nas::encode(m);
  pdu.mac = derivation.capability->mac_for(
      pdu.header.count, keys::Direction::Uplink, pdu.payload);
  rec.action = InterceptRecord::Action::Rewritten;
  return rec;
}

RogueGnbActor::RogueGnbActor(Fabric& fabric, std::string gnb_id,
                             std::string snn, ManipulationStrategy strategy,
                             KnowledgeMode knowledge, std::string amf_id)
    : GnbActor(fabric, std::move(gnb_id), std::move(amf_id)),
      snn_(std::move(snn)),
      strategy_(std::move(strategy)),
      knowledge_mode_(knowledge) {}

keys::ParamObserver& RogueGnbActor::observer_for(const std::string& ue_id) {
  auto it = observers_.find(ue_id);
  if (it == observers_.end()) {
    it = observers_.emplace(ue_id, keys::ParamObserver(snn_)).first;
  }
  return it->second;
}

const keys::ObservedParams* RogueGnbActor::observed(
    const std::string& ue_id) const {
  auto it = observers_.find(ue_id);
  return it == observers_.end() ? nullptr : &it->second.params();
}

keys::AttackerKnowledge RogueGnbActor::knowledge_for(
    const std::string& ue_id) const {
  switch (knowledge_mode_) {
    case KnowledgeMode::None:
      break;
    case KnowledgeMode::NullIntegrityNetwork:
      return keys::KnowledgeNullIntegrityNetwork{};
    case KnowledgeMode::LeakedRoot:
      if (root_keys_) {
        if (auto root = root_keys_(ue_id)) return *root;
      }
      break;
  }
  return keys::KnowledgeNone{};
}

void RogueGnbActor::receive(const Envelope& env) {
  Envelope out = env;
  keys::ParamObserver& obs = observer_for(env.ue_id);

  if (env.direction == keys::Direction::Uplink) {
    InterceptRecord rec =
        rogue_intercept(out.unit, strategy_, obs, knowledge_for(env.ue_id),
                        fabric_.loop().now());
    intercepts_.push_back(rec);
    forward_uplink(std::move(out));
    return;
  }

  // Downlink traffic is relayed untouched but still feeds reconnaissance
  // (the SECURITY MODE COMMAND exposes the integrity algorithm id).
  if (const auto* plain = std::get_if<PlainPdu>(&out.unit)) {
    try {
      obs.on_plaintext(nas::decode(plain->octets));
    } catch (const nas::CodecError&) {
    }
  } else {
    obs.on_secured(std::get<nas::SecuredPdu>(out.unit));
  }
  forward_downlink(std::move(out));
}

ReconRecord RogueGnbActor::recon_report() const {
  ReconRecord report;
  for (const auto& [ue_id, observer] : observers_) {
    const keys::ObservedParams& p = observer.params();
    if (!p.supi && !p.requested_nssai_seen) continue;
    ReconUeEntry entry;
    entry.ue_id = ue_id;
    entry.supi = p.supi;
    if (p.requested_nssai_seen) {
      entry.requested = *p.requested_nssai_seen;
      for (const auto& s : entry.requested) {
        std::string tag = nas::slice_purpose_tag(s.sst);
        if (std::find(entry.purpose_tags.begin(), entry.purpose_tags.end(),
                      tag) == entry.purpose_tags.end()) {
          entry.purpose_tags.push_back(tag);
        }
        // Population counts one UE per SST, not one per request entry.
      }
      std::vector<std::uint8_t> seen_ssts;
      for (const auto& s : entry.requested) {
        if (std::find(seen_ssts.begin(), seen_ssts.end(), s.sst) ==
            seen_ssts.end()) {
          seen_ssts.push_back(s.sst);
          report.population_by_sst[s.sst]++;
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  for (const auto& [sst, count] : report.population_by_sst) {
    report.summary_lines.push_back(nas::slice_purpose_tag(sst) +
                                   " population: " + std::to_string(count));
  }
  return report;
}

}  // namespace slicesim::actors
