#include "slicesim/actors/amf.hpp"

#include <algorithm>

#include "slicesim/common/hex.hpp"

namespace slicesim::actors {

bool AmfConfig::is_configured(const nas::Snssai& s) const {
  return std::find(configured_slices.begin(), configured_slices.end(), s) !=
         configured_slices.end();
}

bool AmfConfig::is_subscribed(const std::string& supi,
                              const nas::Snssai& s) const {
  auto it = subscription_db.find(supi);
  if (it == subscription_db.end()) return false;
  return std::find(it->second.begin(), it->second.end(), s) !=
         it->second.end();
}

bool AmfConfig::is_served(const std::string& gnb_id,
                          const nas::Snssai& s) const {
  auto it = gnb_allowlists.find(gnb_id);
  if (it == gnb_allowlists.end()) return true;
  return std::find(it->second.begin(), it->second.end(), s) !=
         it->second.end();
}

std::optional<nas::Snssai> AmfConfig::default_for_sst(std::uint8_t sst) const {
  if (default_snssai.sst == sst) return default_snssai;
  std::optional<nas::Snssai> best;
  for (const auto& s : configured_slices) {
    if (s.sst != sst) continue;
    if (!best || s < *best) best = s;
  }
  return best;
}

namespace {

std::vector<nas::Snssai> dedupe(const std::vector<nas::Snssai>& in) {
  std::vector<nas::Snssai> out;
  for (const auto& s : in) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

void push_unique(std::vector<nas::Snssai>& v, const nas::Snssai& s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

}  // namespace

SliceSelection select_slices(const std::vector<nas::Snssai>& requested,
                             const std::string& supi,
                             const std::string& gnb_id, const AmfConfig& cfg) {
  if (cfg.subscription_db.find(supi) == cfg.subscription_db.end()) {
    throw UnknownSupiError(supi);
  }

  SliceSelection sel;
  for (const auto& entry : dedupe(requested)) {
    if (entry.sd) {
      if (cfg.is_configured(entry) && cfg.is_subscribed(supi, entry) &&
          cfg.is_served(gnb_id, entry)) {
        push_unique(sel.allowed, entry);
      } else {
        push_unique(sel.rejected, entry);
      }
    } else {
      auto resolved = cfg.default_for_sst(entry.sst);
      if (resolved && cfg.is_served(gnb_id, *resolved)) {
        push_unique(sel.allowed, *resolved);
      } else {
        push_unique(sel.rejected, entry);
      }
    }
  }

  // Connectivity before specificity: an empty or fully rejected request
  // still gets the network default.
  if (sel.allowed.empty() && cfg.is_served(gnb_id, cfg.default_snssai)) {
    sel.allowed.push_back(cfg.default_snssai);
  }
  return sel;
}

AmfActor::AmfActor(Fabric& fabric, AmfConfig config, AmfLog& log,
                   std::uint64_t seed)
    : fabric_(fabric), config_(std::move(config)), log_(log), seed_(seed) {
  fabric_.register_node(*this);
}

std::optional<std::string> AmfActor::resolve_identity(
    const nas::NasMessage& m) const {
  if (m.supi) return *m.supi;
  if (m.suci) {
    for (const auto& [supi, key] : config_.subscriber_keys) {
      (void)key;
      if (keys::conceal_supi(config_.home_network_key, supi) == *m.suci) {
        return supi;
      }
    }
  }
  return std::nullopt;
}

void AmfActor::receive(const Envelope& env) {
  if (const auto* plain = std::get_if<PlainPdu>(&env.unit)) {
    nas::NasMessage m;
    try {
      m = nas::decode(plain->octets);
    } catch (const nas::CodecError&) {
      log_.error(fabric_.loop().now(), "undecodable plaintext NAS message");
      return;
    }
    if (m.kind == nas::MessageKind::RegistrationRequest) {
      on_registration_request(env, m);
    }
    return;
  }
  on_security_mode_complete(env, std::get<nas::SecuredPdu>(env.unit));
}

void AmfActor::on_registration_request(const Envelope& env,
                                       const nas::NasMessage& m) {
  const sim::SimTime now = fabric_.loop().now();
  auto supi = resolve_identity(m);
  if (!supi ||
      config_.subscription_db.find(*supi) == config_.subscription_db.end()) {
    std::string shown = supi ? *supi
                        : m.suci ? "suci:" + to_hex(*m.suci)
                                 : "(no identity)";
    log_.error(now, "unknown subscriber " + shown + ", registration dropped");
    return;
  }

  Session s;
  s.supi = *supi;
  s.gnb_id = env.from;
  log_.info(now, "UE[" + s.supi + "] initial registration request");

  // Authentication stub: challenge with a fresh RAND carried in AUTN; both
  // sides derive (CK, IK) from the subscriber's long-term key and RAND.
  sim::RngStream rand_stream(seed_, "rand." + s.supi);
  s.rand = rand_stream.bytes(16);
  const Bytes& k = config_.subscriber_keys.at(s.supi);
  keys::CkIk ckik = keys::derive_ck_ik(k, s.rand);

  keys::DerivationInputs inputs;
  inputs.snn = config_.snn;
  inputs.supi = s.supi;
  inputs.abba = config_.abba;
  inputs.aid = config_.integrity_policy;
  inputs.autn = s.rand;
  keys::KeyMaterial km = keys::derive_chain(ckik.ck, ckik.ik, inputs);

  s.ctx.k_nasint = km.k_nasint;
  s.ctx.cipher = config_.nas_cipher_policy;
  s.ctx.integrity = config_.integrity_policy;

  log_.info(now, "UE[" + s.supi + "] authentication initiated");
  fabric_.send_backhaul(Envelope{
      id_, env.from, env.ue_id, keys::Direction::Downlink,
      PlainPdu{nas::encode(
          nas::make_authentication_request(s.rand, config_.abba))}});

  // SECURITY MODE COMMAND: integrity-protected with the fresh context but
  // never ciphered, since the UE derives its keys from this very message.
  nas::NasMessage smc = nas::make_security_mode_command(
      static_cast<std::uint8_t>(config_.integrity_policy),
      static_cast<std::uint8_t>(config_.nas_cipher_policy));
  nas::SecuredPdu pdu = nas::apply_security(
      smc, s.ctx, keys::Direction::Downlink, keys::CipherAlg::Ea0);
  log_.info(now, std::string("UE[") + s.supi + "] security mode command sent" +
                     " (cipher=" +
                     keys::cipher_alg_name(config_.nas_cipher_policy) +
                     " integrity=" +
                     keys::integrity_alg_name(config_.integrity_policy) + ")");
  s.smc_sent = true;
  sessions_[env.ue_id] = std::move(s);
  fabric_.send_backhaul(Envelope{id_, env.from, env.ue_id,
                                 keys::Direction::Downlink, pdu});
}

void AmfActor::on_security_mode_complete(const Envelope& env,
                                         const nas::SecuredPdu& pdu) {
  const sim::SimTime now = fabric_.loop().now();
  auto it = sessions_.find(env.ue_id);
  if (it == sessions_.end()) {
    log_.error(now, "secured pdu for unknown session " + env.ue_id);
    return;
  }
  Session& s = it->second;

  nas::NasMessage m;
  try {
    m = nas::verify_and_open(pdu, s.ctx, keys::Direction::Uplink);
  } catch (const nas::SecurityError& e) {
    if (e.kind() == nas::SecurityError::Kind::ReplayDetected) {
      log_.warn(now, "UE[" + s.supi + "] uplink count replay detected");
    } else {
      log_.error(now,
                 "UE[" + s.supi + "] security mode complete integrity failure");
    }
    return;
  }
  if (m.kind != nas::MessageKind::SecurityModeComplete || s.complete) return;

  const nas::NasMessage& embedded = **m.embedded_request;
  std::vector<nas::Snssai> requested =
      embedded.requested_nssai.value_or(std::vector<nas::Snssai>{});
  std::string requested_text =
      requested.empty() ? "none" : nas::format_snssai_list(requested);
  log_.info(now, "UE[" + s.supi +
                     "] security mode complete verified, requested S-NSSAI [" +
                     requested_text + "]");

  SliceSelection sel;
  try {
    sel = select_slices(requested, s.supi, s.gnb_id, config_);
  } catch (const UnknownSupiError& e) {
    log_.error(now, e.what());
    return;
  }

  for (const auto& a : sel.allowed) {
    log_.info(now,
              "UE[" + s.supi + "] S-NSSAI[" + nas::format_snssai(a) +
                  "] allocated");
  }
  for (const auto& r : sel.rejected) {
    log_.info(now, "UE[" + s.supi + "] S-NSSAI[" + nas::format_snssai(r) +
                       "] rejected");
  }
  log_.info(now, "UE[" + s.supi + "] registration complete, allowed=" +
                     std::to_string(sel.allowed.size()));

  registrations_[s.supi] =
      AmfRegistrationRecord{s.supi, s.gnb_id, requested, sel};
  s.complete = true;

  nas::NasMessage accept =
      nas::make_registration_accept(sel.allowed, sel.rejected);
  nas::SecuredPdu out =
      nas::apply_security(accept, s.ctx, keys::Direction::Downlink);
  fabric_.send_backhaul(Envelope{id_, env.from, env.ue_id,
                                 keys::Direction::Downlink, out});
}

}  // namespace slicesim::actors
