#include "slicesim/harness/cdf.hpp"

#include <algorithm>
#include <stdexcept>

namespace slicesim::harness {

std::vector<std::pair<double, double>> emit_cdf(std::vector<double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("emit_cdf: no samples");
  }
  std::sort(samples.begin(), samples.end());
  std::vector<std::pair<double, double>> out;
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    // Collapse runs of equal values to one point at the run's end.
    if (i + 1 < samples.size() && samples[i + 1] == samples[i]) continue;
    out.emplace_back(samples[i], static_cast<double>(i + 1) / n);
  }
  return out;
}

double percentile(std::vector<double> samples, double p) {
  if (p <= 0 || p > 1) {
    throw std::invalid_argument("percentile: p must be in (0, 1]");
  }
  auto cdf = emit_cdf(std::move(samples));
  for (const auto& [value, fraction] : cdf) {
    if (fraction >= p) return value;
  }
  return cdf.back().first;
}

double mean(const std::vector<double>& samples) {
  if (samples.empty()) return 0;
  double sum = 0;
  for (double v : samples) sum += v;
  return sum / static_cast<double>(samples.size());
}

}  // namespace slicesim::harness
