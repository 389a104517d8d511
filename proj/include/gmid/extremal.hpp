#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gmid/law.hpp"

namespace gmid {

/// Homogeneous extremal process whose marginal at time t has d.f. F^t,
/// F = cdf(base_law, .).
struct ExtremalSpec {
  MaxLaw base_law;

  Support support() const noexcept { return base_law.exponent().support(); }
};

enum class SubordinatorKind {
  /// Gamma process, increments over dt are gamma(dt, 1); LT at t = 1 is 1/(1+lam).
  GammaProcess,
  /// Geometric-gamma(beta) law at t = 1 only; LT 1/(1 + beta log(1+lam)).
  GGammaAtUnitTime,
};

struct SubordinatorSpec {
  SubordinatorKind kind = SubordinatorKind::GammaProcess;
  double beta = 1.0;

  static SubordinatorSpec gamma_process() { return {SubordinatorKind::GammaProcess, 1.0}; }
  /// Throws std::invalid_argument unless beta > 0.
  static SubordinatorSpec ggamma_at_unit_time(double beta);

  /// Laplace transform of T(1).
  double laplace(double lam) const;
  /// -log of the Laplace transform at lam = exp(log_lam).
  double neg_log_laplace_at_log(double log_lam) const;
};

struct PathGrid {
  std::vector<double> times;
  std::vector<double> values;
};

/// Quantile of F^t: quantile(base_law, u^(1/t)). Throws std::domain_error
/// unless 0 < u < 1 and t > 0.
double ep_marginal_quantile(const ExtremalSpec& spec, double t, double u);

/// Independent max-increments J_k ~ F^(t_k - t_k-1) (t_0 = 0) on a grid.
/// Throws std::domain_error for an empty, non-positive or non-increasing grid.
std::vector<double> ep_max_increments(const ExtremalSpec& spec, std::span<const double> times,
                                      RandomSource& rng);

/// Exact finite-dimensional simulation on a grid: Y(t_1) ~ F^t_1, then
/// Y(t_k) = max(Y(t_k-1), J_k) with J_k ~ F^(t_k - t_k-1).
/// Throws std::domain_error for an empty, non-positive or non-increasing grid.
PathGrid ep_simulate_path(const ExtremalSpec& spec, std::span<const double> times,
                          RandomSource& rng);

/// Gamma-process path on the grid; T(t) ~ gamma(t, 1). Throws UnsupportedError
/// for GGammaAtUnitTime unless the grid is exactly {1}, std::domain_error for a
/// bad grid.
PathGrid subordinator_path(const SubordinatorSpec& sub, std::span<const double> times,
                           RandomSource& rng);

/// Y(T(t_k)) along a grid: the subordinator path drives the EP clock. Ties in
/// the subordinated clock (zero increments) keep the previous value.
PathGrid time_changed_path(const ExtremalSpec& spec, const SubordinatorSpec& sub,
                           std::span<const double> times, RandomSource& rng);

/// phi(-log F(x))^t. Throws std::domain_error for t <= 0.
double compound_marginal_cdf(const ExtremalSpec& spec, const SubordinatorSpec& sub, double t,
                             double x);

/// n draws of X(t) = Y(T(t)). GGammaAtUnitTime supports t == 1 only
/// (UnsupportedError otherwise).
std::vector<double> compound_simulate(const ExtremalSpec& spec, const SubordinatorSpec& sub,
                                      double t, RandomSource& rng, std::size_t n);

}  // namespace gmid
