#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "gmid/law.hpp"

namespace gmid {

/// Success probability of a geometric count on {1, 2, ...}; mean 1/p.
class GeoP {
 public:
  /// Throws std::invalid_argument unless 0 < p <= 1.
  explicit GeoP(double p);
  double value() const noexcept { return p_; }
  double mean() const noexcept { return 1.0 / p_; }

 private:
  double p_;
};

/// Immutable closed-form d.f. built from a MaxLaw by the operators below.
/// Every node evaluates log(-log F) in closed form, so values near 1 keep full
/// relative precision and values near the support bottom never overflow.
class CdfExpr {
 public:
  /// The law's own d.f.
  static CdfExpr of(const MaxLaw& law);
  /// The d.f. identically 1 (unit mass at or below the support bottom).
  static CdfExpr one();

  double log_neg_log_cdf(double x) const;
  double neg_log_cdf(double x) const { return std::exp(log_neg_log_cdf(x)); }
  double cdf(double x) const { return std::exp(-neg_log_cdf(x)); }

  /// Exponent when this is exactly 1 / (1 + a psi), with the factor a.
  struct GmidForm {
    Exponent exponent;
    double scale;
  };
  std::optional<GmidForm> gmid_form() const;

  std::string describe() const;

  struct Node;

 private:
  explicit CdfExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend CdfExpr geo_max(const CdfExpr&, GeoP);
  friend CdfExpr scale_exponent(const CdfExpr&, double);
  friend CdfExpr n_max(const CdfExpr&, std::uint64_t);
  friend CdfExpr iterate_transform(const CdfExpr&);
  friend CdfExpr limit_geo_gamma(double, std::uint64_t, const Exponent&);
};

/// d.f. of the max of a geometric(p) count of i.i.d. H-variables:
/// p H / (1 - (1-p) H).
CdfExpr geo_max(const CdfExpr& h, GeoP p);
double geo_max_cdf(const CdfExpr& h, GeoP p, double x);

/// Draws N ~ geometric(p) on {1,2,...} and returns the max of N draws from law.
double geo_max_sample(const MaxLaw& law, GeoP p, RandomSource& rng);
std::uint64_t sample_geometric(GeoP p, RandomSource& rng);

/// 1 / (1 + a psi) from h = 1 / (1 + psi). Any a > 0 is accepted here; the
/// geometric-max reading needs a >= 1. Throws std::invalid_argument if h is
/// not of G-MID form or a <= 0.
CdfExpr scale_exponent(const CdfExpr& h, double a);

/// Scale b with geo_max(GMID, p)(x) = GMID(b x): p^(1/alpha) on the Frechet
/// branch, p^(-1/alpha) on the Weibull branch. Throws UnsupportedError for Gumbel.
double semi_stable_scale(GeoP p, const Exponent& e);

/// F^n.
CdfExpr n_max(const CdfExpr& h, std::uint64_t n);
double n_max_cdf(const MaxLaw& law, std::uint64_t n, double x);

/// 1 / (1 + n((1 + psi)^(beta/n) - 1)): d.f. of a geometric(1/n)-max of
/// i.i.d. GammaMID(beta/n) variables. Throws std::invalid_argument for n == 0.
CdfExpr limit_geo_gamma(double beta, std::uint64_t n, const Exponent& e);
double limit_geo_gamma_cdf(double beta, std::uint64_t n, const Exponent& e, double x);

/// x -> 1 / (1 - log f(x)).
CdfExpr iterate_transform(const CdfExpr& f);

}  // namespace gmid
