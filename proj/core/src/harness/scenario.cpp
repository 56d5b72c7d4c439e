#include "slicesim/harness/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

namespace slicesim::harness {

nas::Snssai Scenario::default_slice() const {
  if (default_snssai) return *default_snssai;
  for (const auto& s : slices) {
    if (s.is_default) return s.profile.snssai;
  }
  return slices.empty() ? nas::Snssai{} : slices.front().profile.snssai;
}

const ScenarioSlice* Scenario::find_slice(const nas::Snssai& s) const {
  for (const auto& slice : slices) {
    if (slice.profile.snssai == s) return &slice;
  }
  return nullptr;
}

const dataplane::TrafficProfile* Scenario::find_traffic(
    const std::string& name) const {
  for (const auto& t : traffic) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& message) {
  throw ScenarioError(ScenarioError::Kind::Parse,
                      "line " + std::to_string(line_no) + ": " + message);
}

std::string trim(std::string s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(0, 1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.pop_back();
  }
  return s;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t pos = value.find(',', start);
    std::string item = trim(value.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start));
    if (!item.empty()) out.push_back(item);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& value, int line_no) {
  char* end = nullptr;
  double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    parse_fail(line_no, "expected a number, got '" + value + "'");
  }
  return v;
}

/// Bandwidth with optional K/M/G suffix, in bit/s.
double parse_bandwidth(const std::string& value, int line_no) {
  char* end = nullptr;
  double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str()) {
    parse_fail(line_no, "expected a bandwidth, got '" + value + "'");
  }
  std::string suffix = trim(end);
  if (suffix == "" ) return v;
  if (suffix == "K" || suffix == "k") return v * 1e3;
  if (suffix == "M" || suffix == "m") return v * 1e6;
  if (suffix == "G" || suffix == "g") return v * 1e9;
  parse_fail(line_no, "unknown bandwidth suffix '" + suffix + "'");
}

bool parse_bool(const std::string& value, int line_no) {
  if (value == "true" || value == "on" || value == "yes") return true;
  if (value == "false" || value == "off" || value == "no") return false;
  parse_fail(line_no, "expected a boolean, got '" + value + "'");
}

nas::Snssai parse_snssai_or_fail(const std::string& value, int line_no) {
  auto s = nas::parse_snssai(value);
  if (!s) parse_fail(line_no, "malformed S-NSSAI '" + value + "'");
  return *s;
}

std::vector<nas::Snssai> parse_snssai_list(const std::string& value,
                                           int line_no) {
  std::vector<nas::Snssai> out;
  if (trim(value) == "none") return out;
  for (const auto& item : split_list(value)) {
    out.push_back(parse_snssai_or_fail(item, line_no));
  }
  return out;
}

enum class Section {
  Global,
  Slice,
  Amf,
  Gnb,
  Ue,
  Traffic,
  Attacker,
  Detectors,
};

}  // namespace

Scenario parse_scenario(std::istream& in, const std::string& name) {
  Scenario sc;
  sc.name = name;

  Section section = Section::Global;
  ScenarioSlice* slice = nullptr;
  ScenarioGnb* gnb = nullptr;
  ScenarioUePopulation* ue = nullptr;
  dataplane::TrafficProfile* traffic = nullptr;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(line_no, "unterminated section");
      std::string sect = line.substr(1, line.size() - 2);
      if (sect == "slice") {
        section = Section::Slice;
        sc.slices.emplace_back();
        slice = &sc.slices.back();
      } else if (sect == "amf") {
        section = Section::Amf;
      } else if (sect == "gnb") {
        section = Section::Gnb;
        sc.gnbs.emplace_back();
        gnb = &sc.gnbs.back();
      } else if (sect == "ue") {
        section = Section::Ue;
        sc.ues.emplace_back();
        ue = &sc.ues.back();
      } else if (sect == "traffic") {
        section = Section::Traffic;
        sc.traffic.emplace_back();
        traffic = &sc.traffic.back();
      } else if (sect == "attacker") {
        section = Section::Attacker;
        sc.attacker = AttackerSpec{};
      } else if (sect == "detectors") {
        section = Section::Detectors;
      } else {
        parse_fail(line_no, "unknown section [" + sect + "]");
      }
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      parse_fail(line_no, "expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) parse_fail(line_no, "empty key");

    switch (section) {
      case Section::Global:
        if (key == "name") {
          sc.name = value;
        } else if (key == "seed") {
          sc.seed = std::strtoull(value.c_str(), nullptr, 10);
        } else if (key == "plmn") {
          std::size_t slash = value.find('/');
          if (slash == std::string::npos) {
            parse_fail(line_no, "plmn must be mcc/mnc");
          }
          sc.mcc = trim(value.substr(0, slash));
          sc.mnc = trim(value.substr(slash + 1));
        } else if (key == "duration_s") {
          sc.duration_s = parse_number(value, line_no);
        } else if (key == "warmup_s") {
          sc.warmup_s = parse_number(value, line_no);
        } else if (key == "kpi_window_s") {
          sc.kpi_window_s = parse_number(value, line_no);
        } else if (key == "sweep") {
          for (const auto& item : split_list(value)) {
            sc.sweep.push_back(static_cast<unsigned>(
                parse_number(item, line_no)));
          }
        } else {
          parse_fail(line_no, "unknown global key '" + key + "'");
        }
        break;

      case Section::Slice:
        if (key == "name") {
          slice->name = value;
        } else if (key == "snssai") {
          slice->profile.snssai = parse_snssai_or_fail(value, line_no);
        } else if (key == "rate_mbps") {
          slice->profile.rate_mbps = parse_number(value, line_no);
        } else if (key == "ceil_mbps") {
          slice->profile.ceil_mbps = parse_number(value, line_no);
        } else if (key == "base_delay_ms") {
          slice->profile.base_delay_ms = parse_number(value, line_no);
        } else if (key == "jitter_ms") {
          slice->profile.jitter_ms = parse_number(value, line_no);
        } else if (key == "queue_limit") {
          slice->profile.queue_limit_packets =
              static_cast<unsigned>(parse_number(value, line_no));
        } else if (key == "shaper") {
          if (value == "htb_fq_codel") {
            slice->profile.shaper = dataplane::Shaper::HtbFqCodel;
          } else if (value == "htb_netem_fq_codel") {
            slice->profile.shaper = dataplane::Shaper::HtbNetemFqCodel;
          } else if (value == "htb_tbf") {
            slice->profile.shaper = dataplane::Shaper::HtbTbf;
          } else {
            parse_fail(line_no, "unknown shaper '" + value + "'");
          }
        } else if (key == "default") {
          slice->is_default = parse_bool(value, line_no);
        } else {
          parse_fail(line_no, "unknown slice key '" + key + "'");
        }
        break;

      case Section::Amf:
        if (key == "cipher") {
          if (value == "EA0") {
            sc.cipher = keys::CipherAlg::Ea0;
          } else if (value == "EA2sim") {
            sc.cipher = keys::CipherAlg::Ea2Sim;
          } else {
            parse_fail(line_no, "unknown cipher '" + value + "'");
          }
        } else if (key == "integrity") {
          if (value == "NIA0") {
            sc.integrity = keys::IntegrityAlg::Nia0;
          } else if (value == "NIA2sim") {
            sc.integrity = keys::IntegrityAlg::Nia2Sim;
          } else {
            parse_fail(line_no, "unknown integrity '" + value + "'");
          }
        } else if (key == "default_slice") {
          sc.default_snssai = parse_snssai_or_fail(value, line_no);
        } else if (key.rfind("allowlist.", 0) == 0) {
          sc.gnb_allowlists[key.substr(10)] =
              parse_snssai_list(value, line_no);
        } else {
          parse_fail(line_no, "unknown amf key '" + key + "'");
        }
        break;

      case Section::Gnb:
        if (key == "id") {
          gnb->id = value;
        } else {
          parse_fail(line_no, "unknown gnb key '" + key + "'");
        }
        break;

      case Section::Ue:
        if (key == "supi") {
          ue->supi_base = value;
        } else if (key == "count") {
          if (value == "sweep") {
            ue->count_from_sweep = true;
          } else {
            ue->count = static_cast<unsigned>(parse_number(value, line_no));
          }
        } else if (key == "subscribed") {
          ue->subscribed = parse_snssai_list(value, line_no);
        } else if (key == "preferred") {
          ue->preferred = parse_snssai_list(value, line_no);
        } else if (key == "conceal_supi") {
          ue->conceal_supi = parse_bool(value, line_no);
        } else if (key == "traffic") {
          ue->traffic = value;
        } else if (key == "gnb") {
          ue->gnb = value;
        } else if (key == "arrival_start_s") {
          ue->arrival_start_s = parse_number(value, line_no);
        } else if (key == "arrival_spacing_s") {
          ue->arrival_spacing_s = parse_number(value, line_no);
        } else if (key == "history") {
          for (const auto& item : split_list(value)) {
            std::size_t colon = item.find(':');
            if (colon == std::string::npos) {
              parse_fail(line_no, "history entries are snssai:count");
            }
            nas::Snssai s =
                parse_snssai_or_fail(trim(item.substr(0, colon)), line_no);
            ue->history[s] = static_cast<unsigned>(
                parse_number(trim(item.substr(colon + 1)), line_no));
          }
        } else if (key == "history_tac") {
          ue->history_tac = value;
        } else if (key == "tac") {
          ue->tac = value;
        } else {
          parse_fail(line_no, "unknown ue key '" + key + "'");
        }
        break;

      case Section::Traffic:
        if (key == "name") {
          traffic->name = value;
        } else if (key == "slice") {
          traffic->intended_slice = parse_snssai_or_fail(value, line_no);
        } else if (key == "bandwidth") {
          traffic->bandwidth_bps = parse_bandwidth(value, line_no);
        } else if (key == "payload_bytes") {
          traffic->payload_bytes =
              static_cast<unsigned>(parse_number(value, line_no));
        } else if (key == "concurrency") {
          std::size_t dash = value.find('-');
          if (dash == std::string::npos) {
            traffic->concurrency_min = traffic->concurrency_max =
                static_cast<unsigned>(parse_number(value, line_no));
          } else {
            traffic->concurrency_min = static_cast<unsigned>(
                parse_number(trim(value.substr(0, dash)), line_no));
            traffic->concurrency_max = static_cast<unsigned>(
                parse_number(trim(value.substr(dash + 1)), line_no));
          }
        } else {
          parse_fail(line_no, "unknown traffic key '" + key + "'");
        }
        break;

      case Section::Attacker:
        if (key == "id") {
          sc.attacker->id = value;
        } else if (key == "strategy") {
          if (value == "passthrough") {
            sc.attacker->strategy.kind =
                actors::ManipulationStrategy::Kind::PassThrough;
          } else if (value == "erase_sd") {
            sc.attacker->strategy.kind =
                actors::ManipulationStrategy::Kind::EraseSd;
          } else if (value == "strip") {
            sc.attacker->strategy.kind =
                actors::ManipulationStrategy::Kind::StripNssai;
          } else if (value.rfind("replace ", 0) == 0) {
            sc.attacker->strategy.kind =
                actors::ManipulationStrategy::Kind::ReplaceNssai;
            sc.attacker->strategy.replacement =
                parse_snssai_list(value.substr(8), line_no);
          } else {
            parse_fail(line_no, "unknown strategy '" + value + "'");
          }
        } else if (key == "knowledge") {
          if (value == "none") {
            sc.attacker->knowledge = actors::KnowledgeMode::None;
          } else if (value == "null_integrity") {
            sc.attacker->knowledge =
                actors::KnowledgeMode::NullIntegrityNetwork;
          } else if (value == "leaked_root") {
            sc.attacker->knowledge = actors::KnowledgeMode::LeakedRoot;
          } else {
            parse_fail(line_no, "unknown knowledge mode '" + value + "'");
          }
        } else if (key == "attached_fraction") {
          sc.attacker->attached_fraction = parse_number(value, line_no);
        } else {
          parse_fail(line_no, "unknown attacker key '" + key + "'");
        }
        break;

      case Section::Detectors:
        if (key == "qim") {
          sc.detectors.qim = parse_bool(value, line_no);
        } else if (key == "qim_window_count") {
          sc.detectors.qim_window_count =
              static_cast<unsigned>(parse_number(value, line_no));
        } else if (key == "qim_expectation") {
          if (value == "intended") {
            sc.detectors.qim_expectation = QimExpectationSource::Intended;
          } else if (value == "allowed") {
            sc.detectors.qim_expectation = QimExpectationSource::Allowed;
          } else {
            parse_fail(line_no, "unknown qim_expectation '" + value + "'");
          }
        } else if (key == "nssf") {
          sc.detectors.nssf = parse_bool(value, line_no);
        } else if (key == "nssf_window_s") {
          sc.detectors.nssf_window_s = parse_number(value, line_no);
        } else if (key == "nssf_k_sigma") {
          sc.detectors.nssf_k_sigma = parse_number(value, line_no);
        } else if (key == "nssf_baseline_windows") {
          sc.detectors.nssf_baseline_windows =
              static_cast<unsigned>(parse_number(value, line_no));
        } else if (key == "profiler") {
          sc.detectors.profiler = parse_bool(value, line_no);
        } else {
          parse_fail(line_no, "unknown detectors key '" + key + "'");
        }
        break;
    }
  }

  validate_scenario(sc);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError(ScenarioError::Kind::Parse,
                        "cannot open scenario file " + path);
  }
  std::string name = path;
  if (auto pos = name.find_last_of('/'); pos != std::string::npos) {
    name = name.substr(pos + 1);
  }
  if (auto pos = name.rfind(".scn"); pos != std::string::npos) {
    name = name.substr(0, pos);
  }
  return parse_scenario(in, name);
}

void validate_scenario(const Scenario& s) {
  std::vector<std::string> v;

  if (s.slices.empty()) v.push_back("no [slice] sections");
  for (const auto& slice : s.slices) {
    for (const auto& e : slice.profile.validate()) {
      v.push_back("slice " + slice.name + ": " + e);
    }
  }
  for (const auto& t : s.traffic) {
    for (const auto& e : t.validate()) {
      v.push_back("traffic " + t.name + ": " + e);
    }
    if (!s.find_slice(t.intended_slice)) {
      v.push_back("traffic " + t.name + " targets unprovisioned slice " +
                  nas::format_snssai_compact(t.intended_slice));
    }
  }

  nas::Snssai def = s.default_slice();
  if (!s.find_slice(def)) {
    v.push_back("default slice " + nas::format_snssai_compact(def) +
                " is not configured");
  }
  for (const auto& [gnb_id, list] : s.gnb_allowlists) {
    for (const auto& slice : list) {
      if (!s.find_slice(slice)) {
        v.push_back("allowlist for " + gnb_id + " names unconfigured slice " +
                    nas::format_snssai_compact(slice));
      }
    }
  }

  for (std::size_t i = 1; i < s.sweep.size(); ++i) {
    if (s.sweep[i] <= s.sweep[i - 1]) {
      v.push_back("sweep points must be strictly increasing");
      break;
    }
  }

  if (s.attacker) {
    if (s.attacker->attached_fraction < 0 ||
        s.attacker->attached_fraction > 1) {
      v.push_back("attacker attached_fraction must be in [0, 1]");
    }
    if (s.attacker->strategy.kind ==
            actors::ManipulationStrategy::Kind::ReplaceNssai &&
        s.attacker->strategy.replacement.empty()) {
      v.push_back("replace strategy needs at least one target S-NSSAI");
    }
  }

  for (const auto& ue : s.ues) {
    if (ue.supi_base.size() != 15) {
      v.push_back("ue supi '" + ue.supi_base + "' must be 15 digits");
    }
    if (!ue.traffic.empty() && !s.find_traffic(ue.traffic)) {
      v.push_back("ue " + ue.supi_base + " references unknown traffic '" +
                  ue.traffic + "'");
    }
    bool gnb_known =
        std::any_of(s.gnbs.begin(), s.gnbs.end(),
                    [&](const ScenarioGnb& g) { return g.id == ue.gnb; }) ||
        (s.attacker && s.attacker->id == ue.gnb);
    if (!gnb_known) {
      v.push_back("ue " + ue.supi_base + " attaches to unknown gnb '" +
                  ue.gnb + "'");
    }
    if (ue.count == 0 && !ue.count_from_sweep) {
      v.push_back("ue " + ue.supi_base + " has count 0");
    }
    if (ue.count_from_sweep && s.sweep.empty()) {
      v.push_back("ue " + ue.supi_base + " uses count=sweep without a sweep");
    }
  }

  if (s.duration_s <= 0) v.push_back("duration_s must be positive");
  if (s.warmup_s < 0) v.push_back("warmup_s must be >= 0");
  if (s.kpi_window_s <= 0) v.push_back("kpi_window_s must be positive");

  if (!v.empty()) {
    std::string what = "scenario " + s.name + " invalid:";
    for (const auto& e : v) what += "\n  - " + e;
    throw ScenarioError(ScenarioError::Kind::Validation, what, v);
  }
}

}  // namespace slicesim::harness
