#pragma once

#include <cstdint>
#include <random>

namespace gmid {

/// Seeded draw sequence. A (seed, stream) pair fully determines the draws;
/// distinct streams are seeded through separate seed_seq expansions and are
/// treated as independent. Single owner: not safe to share across threads.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// A fresh source on (seed, stream) for a sub-task, independent of this one.
  RandomSource derive(std::uint64_t stream) const { return RandomSource(seed_, stream); }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  /// Exponential with mean 1.
  double exponential();
  /// Standard normal (Marsaglia polar method).
  double normal();

  std::uint64_t next_bits() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gmid
