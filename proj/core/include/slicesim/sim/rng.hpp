#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "slicesim/common/bytes.hpp"

namespace slicesim::sim {

/// Deterministic named random stream. The generator is SplitMix64 over a
/// state derived from (seed, fnv1a64(stream_id)), so the same (seed, id)
/// pair reproduces the same sequence on any platform, and differently named
/// streams are decorrelated even under the same seed.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view stream_id);

  /// Next raw 64-bit value.
  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniform in [lo, hi] inclusive, unbiased via rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform real in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  Bytes bytes(std::size_t n);

  const std::string& stream_id() const { return stream_id_; }

 private:
  std::uint64_t state_;
  std::string stream_id_;
};

std::uint64_t fnv1a64(std::string_view s);

}  // namespace slicesim::sim
