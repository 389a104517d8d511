#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gmid/max_algebra.hpp"

namespace gmid {

/// Max-autoregressive chain
///
///   X_n = eps_n               with probability p
///   X_n = max(X_n-1, eps_n)   with probability 1 - p
///
/// whose stationary law is the geometric(p)-max of the innovation law.
/// Stationary GGammaMID(beta) marginals need GGammaMID(p beta) innovations.
struct Ar1Spec {
  double p;
  double marginal_beta;
  Exponent exponent;
  /// Replaces the innovation shape (used for the beta/p negative control).
  std::optional<double> innovation_beta_override;

  /// Throws std::invalid_argument unless 0 < p < 1 and beta > 0.
  void validate() const;
  double innovation_beta() const;
  MaxLaw marginal_law() const { return MaxLaw::ggamma_mid(exponent, marginal_beta); }
  MaxLaw innovation_law() const { return MaxLaw::ggamma_mid(exponent, innovation_beta()); }
};

/// F / (p + (1-p) F): innovation d.f. value producing marginal value F.
double innovation_cdf_from_marginal(double marginal_cdf, GeoP p);

double stationary_innovation_shape(double beta, GeoP p);

inline double ar1_step(double x_prev, double innovation, double u, GeoP p) {
  return u < p.value() ? innovation : (x_prev > innovation ? x_prev : innovation);
}

struct Ar1Init {
  /// Empty: X_0 drawn from the stationary marginal.
  std::optional<double> fixed_start;

  static Ar1Init stationary() { return {}; }
  static Ar1Init fixed(double x0) { return {x0}; }
};

/// X_1 .. X_n_steps after the initial state X_0 (not included).
/// Throws std::domain_error for n_steps == 0.
std::vector<double> ar1_simulate(const Ar1Spec& spec, std::size_t n_steps, Ar1Init init,
                                 RandomSource& rng);

/// X_lag of one chain without storing the path.
double ar1_state_at(const Ar1Spec& spec, std::size_t lag, Ar1Init init, RandomSource& rng);

}  // namespace gmid
