#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace gmid {

enum class TheoremId { T2_1, T2_2, T2_3, T2_4, T2_5, T2_6, T2_7, R2_1, T3_1, T3_2, T3_3 };

inline constexpr std::array kAllTheorems = {
    TheoremId::T2_1, TheoremId::T2_2, TheoremId::T2_3, TheoremId::T2_4,
    TheoremId::T2_5, TheoremId::T2_6, TheoremId::T2_7, TheoremId::R2_1,
    TheoremId::T3_1, TheoremId::T3_2, TheoremId::T3_3,
};

std::string_view to_string(TheoremId id);
/// Throws std::domain_error for an unknown id.
TheoremId parse_theorem(std::string_view name);

enum class CheckMode { Algebraic, MonteCarlo };
std::string_view to_string(CheckMode mode);

/// Secondary check that is expected to fail (e.g. the beta/p innovation shape).
struct NegativeControl {
  std::string description;
  double statistic;
  double critical_value;
  bool rejected;
};

struct VerificationReport {
  TheoremId theorem;
  CheckMode mode;
  double discrepancy;
  double tolerance;
  bool pass;
  std::uint64_t seed;
  std::string detail;
  std::optional<NegativeControl> negative_control;
};

/// Monte-Carlo sample size per check.
inline constexpr std::size_t kMonteCarloSize = 100000;

/// Runs the check for one theorem. Algebraic checks ignore the seed.
/// MonteCarlo checks report the worst KS statistic over their parameter
/// lattice; sub-cases draw from independent streams derived from the seed.
VerificationReport verify(TheoremId id, std::uint64_t seed);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace gmid
