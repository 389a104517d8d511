#include "gmid/random.hpp"

#include <cmath>

namespace gmid {

namespace {
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x6d69u};
  return std::mt19937_64(seq);
}
}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(seeded_engine(seed, stream)) {}

double RandomSource::uniform() {
  // midpoint of one of 2^53 equal cells, never 0 or 1
  constexpr double kScale = 1.0 / 9007199254740992.0;
  return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
}

double RandomSource::exponential() { return -std::log(uniform()); }

double RandomSource::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double v1 = 0.0;
  double v2 = 0.0;
  double r2 = 0.0;
  do {
    v1 = 2.0 * uniform() - 1.0;
    v2 = 2.0 * uniform() - 1.0;
    r2 = v1 * v1 + v2 * v2;
  } while (r2 >= 1.0 || r2 == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(r2) / r2);
  spare_normal_ = v2 * factor;
  has_spare_ = true;
  return v1 * factor;
}

}  // namespace gmid
