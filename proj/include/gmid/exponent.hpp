#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace gmid {

enum class ExponentFamily { FrechetType, WeibullType, GumbelType };

std::string_view to_string(ExponentFamily family);
/// Accepts "frechet", "weibull", "gumbel" (case-sensitive). Throws std::invalid_argument.
ExponentFamily parse_family(std::string_view name);

/// Bottom and top of the support of a law built on an exponent.
struct Support {
  double lower;
  double upper;
};

/// Closed-form exponent psi(x) = -log F(x) of a base max-id law.
///
///   Frechet:  psi(x) = x^-alpha   (x > 0), +inf below
///   Weibull:  psi(x) = (-x)^alpha (x < 0), 0 above
///   Gumbel:   psi(x) = exp(-x)
///
/// Gumbel ignores alpha and always stores 1.
class Exponent {
 public:
  static Exponent frechet(double alpha);
  static Exponent weibull(double alpha);
  static Exponent gumbel();
  /// Throws std::invalid_argument for alpha <= 0 or non-finite on the power families.
  static Exponent make(ExponentFamily family, double alpha);

  ExponentFamily family() const noexcept { return family_; }
  double alpha() const noexcept { return alpha_; }

  /// psi(x); +inf below the Frechet support bottom.
  double eval(double x) const noexcept;

  /// log psi(x), finite wherever x is finite and strictly inside the support
  /// (psi itself overflows near the bottom of every family).
  double log_eval(double x) const noexcept;

  /// The x with eval(x) == s. Throws std::domain_error unless 0 < s < inf.
  double inverse(double s) const;

  /// inverse(exp(log_s)) without forming s. Results are clamped to finite
  /// values strictly inside the support: exposures too large for a double x
  /// land on the smallest representable point above the support bottom.
  /// NaN throws std::domain_error.
  double inverse_log(double log_s) const;

  Support support() const noexcept;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent(ExponentFamily family, double alpha) : family_(family), alpha_(alpha) {}

  ExponentFamily family_;
  double alpha_;
};

}  // namespace gmid
