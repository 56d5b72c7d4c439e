#include "slicesim/defense/nssf.hpp"

#include <cmath>
#include <cstdio>

namespace slicesim::defense {

std::vector<WindowShares> allocation_shares(
    const std::vector<AllocationEvent>& events, double window_s) {
  std::map<long, std::map<nas::Snssai, unsigned>> counts;
  for (const auto& ev : events) {
    counts[static_cast<long>(ev.time_s / window_s)][ev.slice]++;
  }
  std::vector<WindowShares> out;
  out.reserve(counts.size());
  for (const auto& [w, per_slice] : counts) {
    unsigned total = 0;
    for (const auto& [slice, n] : per_slice) total += n;
    WindowShares ws;
    ws.window_start_s = static_cast<double>(w) * window_s;
    for (const auto& [slice, n] : per_slice) {
      ws.shares[slice] = static_cast<double>(n) / total;
    }
    out.push_back(std::move(ws));
  }
  return out;
}

NssfBaseline build_nssf_baseline(const std::vector<AllocationEvent>& events,
                                 const NssfConfig& cfg) {
  auto windows = allocation_shares(events, cfg.window_s);
  if (windows.size() < cfg.min_baseline_windows) {
    throw InsufficientBaselineError(
        "nssf baseline needs >= " + std::to_string(cfg.min_baseline_windows) +
        " non-empty windows, trace has " + std::to_string(windows.size()));
  }
  windows.resize(cfg.min_baseline_windows);

  NssfBaseline base;
  base.window_count = static_cast<unsigned>(windows.size());
  std::map<nas::Snssai, std::vector<double>> samples;
  for (const auto& ws : windows) {
    for (const auto& [slice, share] : ws.shares) samples[slice];
  }
  for (auto& [slice, values] : samples) {
    for (const auto& ws : windows) {
      auto it = ws.shares.find(slice);
      values.push_back(it == ws.shares.end() ? 0.0 : it->second);
    }
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    base.mean_share[slice] = mean;
    base.sigma_share[slice] = std::sqrt(var);
  }
  return base;
}

std::vector<Alert> nssf_check(const std::vector<AllocationEvent>& events,
                              const NssfBaseline& baseline,
                              const NssfConfig& cfg) {
  std::vector<Alert> alerts;
  for (const auto& ws : allocation_shares(events, cfg.window_s)) {
    for (const auto& [slice, share] : ws.shares) {
      double mean = 0, sigma = 0;
      if (auto it = baseline.mean_share.find(slice);
          it != baseline.mean_share.end()) {
        mean = it->second;
        sigma = baseline.sigma_share.at(slice);
      }
      double threshold = mean + cfg.k_sigma * sigma;
      if (share > threshold) {
        char detail[160];
        std::snprintf(detail, sizeof(detail),
                      "allocation share %.2f exceeds baseline %.2f + "
                      "%.1f*sigma(%.3f)",
                      share, mean, cfg.k_sigma, sigma);
        alerts.push_back(Alert{ws.window_start_s,
                               AlertKind::DistributionAnomaly,
                               nas::format_snssai_compact(slice), detail});
      }
    }
  }
  return alerts;
}

}  // namespace slicesim::defense
