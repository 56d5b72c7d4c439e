#include "slicesim/harness/keytool.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "slicesim/common/hex.hpp"

namespace slicesim::harness {

namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(0, 1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.pop_back();
  }
  return s;
}

Bytes hex_or_fail(const std::string& value, const std::string& key) {
  auto b = from_hex(value);
  if (!b) throw std::runtime_error("params: " + key + " is not valid hex");
  return *b;
}

}  // namespace

KeyToolParams parse_keytool_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open params file " + path);

  KeyToolParams p;
  std::vector<std::string> observed;
  std::string snn, supi;
  std::optional<Bytes> abba, autn;
  std::optional<keys::IntegrityAlg> aid;

  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("params: expected key=value, got '" + line +
                               "'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "ck") {
      p.ck = hex_or_fail(value, key);
    } else if (key == "ik") {
      p.ik = hex_or_fail(value, key);
    } else if (key == "snn") {
      snn = value;
    } else if (key == "supi") {
      supi = value;
    } else if (key == "abba") {
      abba = hex_or_fail(value, key);
    } else if (key == "autn") {
      autn = hex_or_fail(value, key);
    } else if (key == "aid") {
      aid = static_cast<keys::IntegrityAlg>(
          std::strtoul(value.c_str(), nullptr, 0));
    } else if (key == "mode") {
      if (value == "attacker") {
        p.attacker_mode = true;
      } else if (value != "network") {
        throw std::runtime_error("params: mode must be network or attacker");
      }
    } else if (key == "observed") {
      std::size_t start = 0;
      while (start <= value.size()) {
        std::size_t pos = value.find(',', start);
        observed.push_back(trim(value.substr(
            start,
            pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
    } else {
      throw std::runtime_error("params: unknown key '" + key + "'");
    }
  }

  auto is_observed = [&](const char* name) {
    if (!p.attacker_mode || observed.empty()) return true;
    for (const auto& o : observed) {
      if (o == name) return true;
    }
    return false;
  };
  if (!snn.empty() && is_observed("snn")) p.snn = snn;
  if (!supi.empty() && is_observed("supi")) p.supi = supi;
  if (abba && is_observed("abba")) p.abba = abba;
  if (autn && is_observed("autn")) p.autn = autn;
  if (aid && is_observed("aid")) p.aid = aid;
  return p;
}

std::vector<std::string> derive_key_report(const KeyToolParams& p) {
  std::vector<std::string> out;
  if (p.ck.size() != 16 || p.ik.size() != 16) {
    throw std::runtime_error("params: ck and ik must be 16 octets each");
  }
  Bytes root = p.ck;
  append(root, p.ik);
  out.push_back("CK||IK          : " + to_hex(root));

  auto blocked = [&](const char* fc, const std::string& missing) {
    out.push_back(std::string("K step   FC=") + fc +
                  ": blocked, missing " + missing);
  };

  if (!p.snn || !p.autn) {
    std::string missing;
    if (!p.snn) missing = "snn";
    if (!p.autn) missing += (missing.empty() ? "" : ", ") + std::string("autn");
    blocked("0x6A", missing);
    return out;
  }
  Bytes snn_bytes = to_bytes(*p.snn);
  if (p.autn->size() < 6) {
    throw std::runtime_error("params: autn must be at least 6 octets");
  }
  Bytes autn_token(p.autn->begin(), p.autn->begin() + 6);
  keys::Digest k_ausf = keys::kdf(root, keys::kFcAusf, {snn_bytes, autn_token});
  out.push_back("K_AUSF   FC=0x6A: " + to_hex(k_ausf));

  keys::Digest k_seaf =
      keys::kdf(Bytes(k_ausf.begin(), k_ausf.end()), keys::kFcSeaf,
                {snn_bytes});
  out.push_back("K_SEAF   FC=0x6C: " + to_hex(k_seaf));

  if (!p.supi || !p.abba) {
    std::string missing;
    if (!p.supi) missing = "supi";
    if (!p.abba) missing += (missing.empty() ? "" : ", ") + std::string("abba");
    blocked("0x6D", missing);
    return out;
  }
  keys::Digest k_amf =
      keys::kdf(Bytes(k_seaf.begin(), k_seaf.end()), keys::kFcAmf,
                {to_bytes(*p.supi), *p.abba});
  out.push_back("K_AMF    FC=0x6D: " + to_hex(k_amf));

  if (!p.aid) {
    blocked("0x69", "aid");
    return out;
  }
  keys::Digest k_nasint_full =
      keys::kdf(Bytes(k_amf.begin(), k_amf.end()), keys::kFcNasInt,
                {Bytes{keys::kAlgTypeNasInt},
                 Bytes{static_cast<std::uint8_t>(*p.aid)}});
  Bytes k_nasint(k_nasint_full.begin() + 16, k_nasint_full.end());
  out.push_back("K_NASint FC=0x69: " + to_hex(k_nasint));
  return out;
}

}  // namespace slicesim::harness
