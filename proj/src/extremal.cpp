#include "gmid/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gmid/errors.hpp"

namespace gmid {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_grid(std::span<const double> times) {
  if (times.empty()) throw std::domain_error("time grid is empty");
  double prev = 0.0;
  for (const double t : times) {
    if (!(t > prev) || !std::isfinite(t)) {
      throw std::domain_error("time grid must be positive and strictly increasing");
    }
    prev = t;
  }
}

// draw from F^t given log t; -inf (t == 0) means no mass has accrued
double draw_power_marginal(const MaxLaw& law, double log_t, RandomSource& rng) {
  if (log_t == -kInf) return -kInf;
  return quantile_from_log_exposure(law, std::log(-std::log(rng.uniform())) - log_t);
}

bool unit_grid(std::span<const double> times) { return times.size() == 1 && times[0] == 1.0; }
}  // namespace

SubordinatorSpec SubordinatorSpec::ggamma_at_unit_time(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("subordinator: beta must be positive and finite");
  }
  return {SubordinatorKind::GGammaAtUnitTime, beta};
}

double SubordinatorSpec::laplace(double lam) const {
  switch (kind) {
    case SubordinatorKind::GammaProcess: return 1.0 / (1.0 + lam);
    case SubordinatorKind::GGammaAtUnitTime: return lt_ggamma(beta, lam);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double SubordinatorSpec::neg_log_laplace_at_log(double log_lam) const {
  switch (kind) {
    case SubordinatorKind::GammaProcess: return log1p_exp(log_lam);
    case SubordinatorKind::GGammaAtUnitTime: return std::log1p(beta * log1p_exp(log_lam));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double ep_marginal_quantile(const ExtremalSpec& spec, double t, double u) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("ep: t must be positive");
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("ep: u must lie in (0,1), got " + std::to_string(u));
  }
  return quantile_from_log_exposure(spec.base_law, std::log(-std::log(u)) - std::log(t));
}

std::vector<double> ep_max_increments(const ExtremalSpec& spec, std::span<const double> times,
                                      RandomSource& rng) {
  require_grid(times);
  std::vector<double> jumps;
  jumps.reserve(times.size());
  double prev_t = 0.0;
  for (const double t : times) {
    jumps.push_back(draw_power_marginal(spec.base_law, std::log(t - prev_t), rng));
    prev_t = t;
  }
  return jumps;
}

PathGrid ep_simulate_path(const ExtremalSpec& spec, std::span<const double> times,
                          RandomSource& rng) {
  PathGrid path{{}, ep_max_increments(spec, times, rng)};
  path.times.assign(times.begin(), times.end());
  for (std::size_t k = 1; k < path.values.size(); ++k) {
    path.values[k] = std::max(path.values[k], path.values[k - 1]);
  }
  return path;
}

PathGrid subordinator_path(const SubordinatorSpec& sub, std::span<const double> times,
                           RandomSource& rng) {
  require_grid(times);
  PathGrid path{{times.begin(), times.end()}, {}};
  if (sub.kind == SubordinatorKind::GGammaAtUnitTime) {
    if (!unit_grid(times)) {
      throw UnsupportedError("geometric-gamma subordinator is only available at t = 1");
    }
    path.values.push_back(sample_ggamma(sub.beta, rng));
    return path;
  }
  double prev_t = 0.0;
  double level = 0.0;
  for (const double t : times) {
    level += sample_gamma(t - prev_t, rng);
    path.values.push_back(level);
    prev_t = t;
  }
  return path;
}

PathGrid time_changed_path(const ExtremalSpec& spec, const SubordinatorSpec& sub,
                           std::span<const double> times, RandomSource& rng) {
  const PathGrid clock = subordinator_path(sub, times, rng);
  PathGrid path{clock.times, {}};
  path.values.reserve(clock.times.size());
  double prev_clock = 0.0;
  double level = -kInf;
  for (const double tau : clock.values) {
    const double dt = tau - prev_clock;
    if (dt > 0.0) {
      level = std::max(level, draw_power_marginal(spec.base_law, std::log(dt), rng));
    }
    path.values.push_back(level);
    prev_clock = std::max(prev_clock, tau);
  }
  return path;
}

double compound_marginal_cdf(const ExtremalSpec& spec, const SubordinatorSpec& sub, double t,
                             double x) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("compound: t must be positive");
  // exponent measure mu = -log F(x), carried as log mu
  const double log_mu = log_neg_log_cdf(spec.base_law, x);
  if (log_mu == kInf) return 0.0;
  if (log_mu == -kInf) return 1.0;
  return std::exp(-t * sub.neg_log_laplace_at_log(log_mu));
}

std::vector<double> compound_simulate(const ExtremalSpec& spec, const SubordinatorSpec& sub,
                                      double t, RandomSource& rng, std::size_t n) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("compound: t must be positive");
  if (sub.kind == SubordinatorKind::GGammaAtUnitTime && t != 1.0) {
    throw UnsupportedError("geometric-gamma subordinator is only available at t = 1");
  }
  if (n == 0) throw std::domain_error("compound_simulate: n must be at least 1");
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    const double log_tau = sub.kind == SubordinatorKind::GammaProcess
                               ? log_sample_gamma(t, rng)
                               : log_sample_ggamma(sub.beta, rng);
    if (log_tau == -kInf) continue;  // T == 0: resample
    out.push_back(draw_power_marginal(spec.base_law, log_tau, rng));
  }
  return out;
}

}  // namespace gmid
