#include "slicesim/harness/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace slicesim::harness {

std::string sd_column(const nas::Snssai& s) {
  if (!s.sd) return "none";
  char buf[16];
  std::snprintf(buf, sizeof(buf), "0x%06x", *s.sd);
  return buf;
}

std::string kpi_csv_row(const std::string& scenario, const nas::Snssai& slice,
                        unsigned n_ue, const dataplane::KpiRecord& rec) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%u,%s,%u,%s,%.3f,%.3f,%.6f,%.6f,%.6f",
                scenario.c_str(), slice.sst, sd_column(slice).c_str(), n_ue,
                rec.session_id.c_str(), rec.window_start_s, rec.bitrate_bps,
                rec.jitter_ms, rec.rtt_ms, rec.loss_frac);
  return buf;
}

std::string cpu_csv_row(const std::string& scenario, unsigned n_ue,
                        const dataplane::CpuSample& sample) {
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%s,%u,%.3f,%.3f,%.3f,%.3f,%.3f",
                scenario.c_str(), n_ue, sample.window_start_s, sample.mean_pct,
                sample.user_pct, sample.system_pct, sample.wait_pct);
  return buf;
}

std::string alert_csv_row(const defense::Alert& alert) {
  std::string detail = alert.detail;
  for (char& c : detail) {
    if (c == ',' || c == '\n') c = ';';
  }
  char buf[320];
  std::snprintf(buf, sizeof(buf), "%.3f,%s,%s,%s", alert.time_s,
                defense::alert_kind_name(alert.kind), alert.subject.c_str(),
                detail.c_str());
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<KpiCsvRow> read_kpi_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open KPI CSV " + path);
  std::vector<KpiCsvRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != kKpiCsvHeader) {
        throw std::runtime_error("KPI CSV header mismatch in " + path);
      }
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 10) {
      throw std::runtime_error("malformed KPI CSV row: " + line);
    }
    KpiCsvRow row;
    row.scenario = fields[0];
    row.slice.sst = static_cast<std::uint8_t>(std::strtoul(
        fields[1].c_str(), nullptr, 10));
    if (fields[2] != "none") {
      row.slice.sd = static_cast<std::uint32_t>(
          std::strtoul(fields[2].c_str(), nullptr, 0));
    }
    row.n_ue = static_cast<unsigned>(std::strtoul(fields[3].c_str(), nullptr,
                                                  10));
    row.record.session_id = fields[4];
    row.record.window_start_s = std::strtod(fields[5].c_str(), nullptr);
    row.record.bitrate_bps = std::strtod(fields[6].c_str(), nullptr);
    row.record.jitter_ms = std::strtod(fields[7].c_str(), nullptr);
    row.record.rtt_ms = std::strtod(fields[8].c_str(), nullptr);
    row.record.loss_frac = std::strtod(fields[9].c_str(), nullptr);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& l : lines) {
    out << l << '\n';
  }
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace slicesim::harness
