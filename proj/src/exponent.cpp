#include "gmid/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmid {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTiny = std::numeric_limits<double>::denorm_min();
constexpr double kHuge = std::numeric_limits<double>::max();

void require_tail_index(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("exponent: alpha must be positive and finite, got " +
                                std::to_string(alpha));
  }
}
}  // namespace

std::string_view to_string(ExponentFamily family) {
  switch (family) {
    case ExponentFamily::FrechetType: return "frechet";
    case ExponentFamily::WeibullType: return "weibull";
    case ExponentFamily::GumbelType: return "gumbel";
  }
  return "unknown";
}

ExponentFamily parse_family(std::string_view name) {
  if (name == "frechet") return ExponentFamily::FrechetType;
  if (name == "weibull") return ExponentFamily::WeibullType;
  if (name == "gumbel") return ExponentFamily::GumbelType;
  throw std::invalid_argument("unknown exponent family '" + std::string(name) + "'");
}

Exponent Exponent::frechet(double alpha) {
  require_tail_index(alpha);
  return {ExponentFamily::FrechetType, alpha};
}

Exponent Exponent::weibull(double alpha) {
  require_tail_index(alpha);
  return {ExponentFamily::WeibullType, alpha};
}

Exponent Exponent::gumbel() { return {ExponentFamily::GumbelType, 1.0}; }

Exponent Exponent::make(ExponentFamily family, double alpha) {
  switch (family) {
    case ExponentFamily::FrechetType: return frechet(alpha);
    case ExponentFamily::WeibullType: return weibull(alpha);
    case ExponentFamily::GumbelType: return gumbel();
  }
  throw std::invalid_argument("unknown exponent family");
}

double Exponent::eval(double x) const noexcept {
  switch (family_) {
    case ExponentFamily::FrechetType:
      return x > 0.0 ? std::pow(x, -alpha_) : kInf;
    case ExponentFamily::WeibullType:
      return x < 0.0 ? std::pow(-x, alpha_) : 0.0;
    case ExponentFamily::GumbelType:
      return std::exp(-x);
  }
  return kInf;
}

double Exponent::log_eval(double x) const noexcept {
  switch (family_) {
    case ExponentFamily::FrechetType:
      return x > 0.0 ? -alpha_ * std::log(x) : kInf;
    case ExponentFamily::WeibullType:
      return x < 0.0 ? alpha_ * std::log(-x) : -kInf;
    case ExponentFamily::GumbelType:
      return -x;
  }
  return kInf;
}

double Exponent::inverse(double s) const {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error("exponent inverse: s must be positive and finite, got " +
                            std::to_string(s));
  }
  return inverse_log(std::log(s));
}

double Exponent::inverse_log(double log_s) const {
  if (std::isnan(log_s)) throw std::domain_error("exponent inverse: log s is NaN");
  switch (family_) {
    case ExponentFamily::FrechetType:
      return std::clamp(std::exp(-log_s / alpha_), kTiny, kHuge);
    case ExponentFamily::WeibullType:
      return std::clamp(-std::exp(log_s / alpha_), -kHuge, -kTiny);
    case ExponentFamily::GumbelType:
      return std::clamp(-log_s, -kHuge, kHuge);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Support Exponent::support() const noexcept {
  switch (family_) {
    case ExponentFamily::FrechetType: return {0.0, kInf};
    case ExponentFamily::WeibullType: return {-kInf, 0.0};
    case ExponentFamily::GumbelType: return {-kInf, kInf};
  }
  return {-kInf, kInf};
}

}  // namespace gmid
