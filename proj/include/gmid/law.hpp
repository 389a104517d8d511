#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gmid/exponent.hpp"
#include "gmid/random.hpp"

namespace gmid {

enum class LawKind { Base, GMID, GammaMID, GGammaMID };

std::string_view to_string(LawKind kind);
/// Accepts "base", "gmid", "gamma-mid", "ggamma-mid".
LawKind parse_kind(std::string_view name);

/// One of the four max-id families over an exponent psi:
///
///   Base       exp(-psi)
///   GMID       1 / (1 + psi)
///   GammaMID   (1 + psi)^-beta
///   GGammaMID  1 / (1 + beta log(1 + psi))
///
/// beta is stored as 1 and ignored for Base and GMID.
class MaxLaw {
 public:
  static MaxLaw base(Exponent e) { return {LawKind::Base, e, 1.0}; }
  static MaxLaw gmid(Exponent e) { return {LawKind::GMID, e, 1.0}; }
  static MaxLaw gamma_mid(Exponent e, double beta) { return make(LawKind::GammaMID, e, beta); }
  static MaxLaw ggamma_mid(Exponent e, double beta) { return make(LawKind::GGammaMID, e, beta); }
  /// Throws std::invalid_argument if beta is not positive and finite
  /// (only checked for the shaped kinds).
  static MaxLaw make(LawKind kind, Exponent e, double beta);

  LawKind kind() const noexcept { return kind_; }
  const Exponent& exponent() const noexcept { return exponent_; }
  double beta() const noexcept { return beta_; }

  friend bool operator==(const MaxLaw&, const MaxLaw&) = default;

 private:
  MaxLaw(LawKind kind, Exponent e, double beta) : kind_(kind), exponent_(e), beta_(beta) {}

  LawKind kind_;
  Exponent exponent_;
  double beta_;
};

/// -log F(x) in closed form; +inf below the support, 0 at +inf.
double neg_log_cdf(const MaxLaw& law, double x);
/// log(-log F(x)); finite at every finite point strictly inside the support,
/// where -log F itself may overflow (Base near its bottom).
double log_neg_log_cdf(const MaxLaw& law, double x);
double cdf(const MaxLaw& law, double x);

/// Exact inverse of cdf. Throws std::domain_error unless 0 < u < 1.
double quantile(const MaxLaw& law, double u);

/// quantile(law, exp(-w)) given log_w = log(w), evaluated without forming
/// u or s so that exposures far beyond double range still land on the
/// correct side of the support. Used by the latent and time-changed routes.
double quantile_from_log_exposure(const MaxLaw& law, double log_w);

/// Laplace transform 1 / (1 + beta log(1 + lam)) of the geometric-gamma law.
double lt_ggamma(double beta, double lam);

/// log of a unit-scale gamma(shape) variate (Marsaglia-Tsang, with the
/// U^(1/shape) boost below shape 1). Working in log space keeps tiny shapes
/// from underflowing. Throws std::domain_error for shape <= 0.
double log_sample_gamma(double shape, RandomSource& rng);
double sample_gamma(double shape, RandomSource& rng);

/// Geometric-gamma(beta) draw: E ~ exp(1), then gamma(beta * E).
double log_sample_ggamma(double beta, RandomSource& rng);
double sample_ggamma(double beta, RandomSource& rng);

/// n draws quantile(law, U). Throws std::domain_error for n == 0.
std::vector<double> sample_inverse(const MaxLaw& law, RandomSource& rng, std::size_t n);

/// n draws through the mixture representation: latent T, then X with
/// conditional d.f. exp(-T psi). Throws UnsupportedError for Base.
std::vector<double> sample_latent(const MaxLaw& law, RandomSource& rng, std::size_t n);

/// log(expm1(y)) without overflow for large y.
double log_expm1(double y);
/// log(1 + exp(y)) without overflow for large y.
double log1p_exp(double y);
/// log(log(1 + exp(y))) without overflow or underflow.
double log_log1p_exp(double y);

}  // namespace gmid
