#pragma once

#include <map>
#include <optional>
#include <string>

#include "slicesim/harness/scenario.hpp"

namespace slicesim::harness {

struct RunOptions {
  std::string out_dir = "out";
  bool svg = false;
  bool trace = false;  // NAS PDU hex-dump trace log
  std::optional<std::uint64_t> seed_override;
};

/// Paths are empty when a run family does not produce that artifact.
struct RunResult {
  std::string kpi_csv;
  std::string cpu_csv;
  std::string amf_log;
  std::string alerts_csv;
  std::map<std::string, double> summary;
};

/// Benign QoS profiling: each configured UE runs its traffic on the slice
/// it registered onto; emits KPI/CPU CSVs, per-slice CDF tables and the AMF
/// log. Rejects scenarios with an attacker.
RunResult run_baseline(const Scenario& s, const RunOptions& opts);

/// SD-erasure attack: runs the attack scenario plus a benign twin whose UEs
/// request the post-manipulation NSSAI themselves, then diffs the two AMF
/// logs modulo timestamps and tabulates requested vs believed vs actual
/// allocations. Requires an attacker with the erase_sd strategy.
RunResult run_stealth(const Scenario& s, const RunOptions& opts);

/// Crowd-redirection sweep: per sweep point n, registers n UEs through the
/// rogue gNB onto the replacement slice, runs their traffic, and emits KPI,
/// CPU and a per-point summary with the closed-form fair-share oracle
/// columns alongside. Requires a replace strategy and a sweep.
RunResult run_contamination(const Scenario& s, const RunOptions& opts);

/// Re-runs the configured detectors over recorded traces (KPI CSV + AMF
/// log) and emits the alert CSV.
RunResult run_detect(const Scenario& s, const std::string& kpi_csv_path,
                     const std::string& amf_log_path, const RunOptions& opts);

}  // namespace slicesim::harness
