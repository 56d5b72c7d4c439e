#pragma once

#include <utility>
#include <vector>

namespace slicesim::harness {

/// Empirical CDF: sorted distinct sample values with their cumulative
/// fraction. Throws std::invalid_argument on an empty sample set.
std::vector<std::pair<double, double>> emit_cdf(std::vector<double> samples);

/// Smallest sample value whose cumulative fraction reaches p (e.g. p=0.99
/// for the p99). p must be in (0, 1].
double percentile(std::vector<double> samples, double p);

double mean(const std::vector<double>& samples);

}  // namespace slicesim::harness
