#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicesim/actors/gnb.hpp"
#include "slicesim/dataplane/profile.hpp"
#include "slicesim/defense/profiler.hpp"
#include "slicesim/keys/chain.hpp"

namespace slicesim::harness {

struct ScenarioSlice {
  std::string name;
  dataplane::SliceProfile profile;
  bool is_default = false;
};

struct ScenarioGnb {
  std::string id;
};

/// One UE or a population of identical UEs. SUPIs count up from supi_base.
struct ScenarioUePopulation {
  std::string supi_base;
  unsigned count = 1;
  bool count_from_sweep = false;  // "count = sweep"
  std::vector<nas::Snssai> subscribed;
  std::vector<nas::Snssai> preferred;
  bool conceal_supi = false;
  std::string traffic;  // traffic profile name, may be empty
  std::string gnb;      // attach target: a [gnb] id or the attacker id
  double arrival_start_s = 0.0;
  double arrival_spacing_s = 0.001;
  std::map<nas::Snssai, unsigned> history;  // behavioral profiler seed
  std::optional<std::string> history_tac;
  std::optional<std::string> tac;
};

struct AttackerSpec {
  std::string id = "rogue";
  actors::ManipulationStrategy strategy;
  actors::KnowledgeMode knowledge = actors::KnowledgeMode::None;
  double attached_fraction = 1.0;
};

/// Where the QoS Integrity Monitor takes its per-session expectation from:
/// the slice the session's application class is meant for (the service the
/// subscriber contracted), or the slice the control plane allowed. A
/// registration-level redirect moves both the session and its Allowed
/// NSSAI, so only the intent-sourced expectation can see it.
enum class QimExpectationSource { Intended, Allowed };

struct DetectorSpec {
  bool qim = false;
  unsigned qim_window_count = 5;
  QimExpectationSource qim_expectation = QimExpectationSource::Intended;
  bool nssf = false;
  double nssf_window_s = 1.0;
  double nssf_k_sigma = 3.0;
  unsigned nssf_baseline_windows = 10;
  bool profiler = false;
};

struct Scenario {
  std::string name = "scenario";
  std::uint64_t seed = 1;
  std::string mcc = "001";
  std::string mnc = "01";
  double duration_s = 60.0;
  double warmup_s = 5.0;
  double kpi_window_s = 1.0;

  keys::CipherAlg cipher = keys::CipherAlg::Ea0;
  keys::IntegrityAlg integrity = keys::IntegrityAlg::Nia2Sim;
  std::optional<nas::Snssai> default_snssai;
  std::map<std::string, std::vector<nas::Snssai>> gnb_allowlists;

  std::vector<ScenarioSlice> slices;
  std::vector<ScenarioGnb> gnbs;
  std::vector<ScenarioUePopulation> ues;
  std::vector<dataplane::TrafficProfile> traffic;
  std::optional<AttackerSpec> attacker;
  std::vector<unsigned> sweep;
  DetectorSpec detectors;

  std::string snn() const { return keys::build_snn(mcc, mnc); }
  nas::Snssai default_slice() const;
  const ScenarioSlice* find_slice(const nas::Snssai& s) const;
  const dataplane::TrafficProfile* find_traffic(const std::string& name) const;
};

class ScenarioError : public std::runtime_error {
 public:
  enum class Kind { Parse, Validation };
  ScenarioError(Kind kind, const std::string& what,
                std::vector<std::string> violations = {})
      : std::runtime_error(what),
        kind_(kind),
        violations_(std::move(violations)) {}
  Kind kind() const { return kind_; }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  Kind kind_;
  std::vector<std::string> violations_;
};

/// Parses and validates. Parse errors name the offending line; validation
/// errors carry the full violation list.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(std::istream& in, const std::string& name);
void validate_scenario(const Scenario& s);

}  // namespace slicesim::harness
