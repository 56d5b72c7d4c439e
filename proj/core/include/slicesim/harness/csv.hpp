#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicesim/dataplane/kpi.hpp"
#include "slicesim/defense/alert.hpp"
#include "slicesim/nas/snssai.hpp"

namespace slicesim::harness {

// Pinned CSV schemas. Bodies are emitted with fixed-precision formatting so
// repeated runs of the same scenario are byte-identical.

inline constexpr const char* kKpiCsvHeader =
    "scenario,slice_sst,slice_sd,n_ue,session_id,window_start_s,bitrate_bps,"
    "jitter_ms,rtt_ms,loss_frac";
inline constexpr const char* kCpuCsvHeader =
    "scenario,n_ue,window_start_s,mean_pct,user_pct,system_pct,wait_pct";
inline constexpr const char* kAlertCsvHeader = "time_s,kind,subject,detail";

std::string kpi_csv_row(const std::string& scenario, const nas::Snssai& slice,
                        unsigned n_ue, const dataplane::KpiRecord& rec);
std::string cpu_csv_row(const std::string& scenario, unsigned n_ue,
                        const dataplane::CpuSample& sample);
std::string alert_csv_row(const defense::Alert& alert);

/// One parsed KPI CSV line.
struct KpiCsvRow {
  std::string scenario;
  nas::Snssai slice;
  unsigned n_ue = 0;
  dataplane::KpiRecord record;
};

std::vector<KpiCsvRow> read_kpi_csv(const std::string& path);

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines);
std::vector<std::string> read_lines(const std::string& path);

/// "0x010203" / "none" formatting used by the slice_sd column.
std::string sd_column(const nas::Snssai& s);

}  // namespace slicesim::harness
