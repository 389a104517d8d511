#include "gmid/max_ar1.hpp"

#include <cmath>
#include <stdexcept>

namespace gmid {

void Ar1Spec::validate() const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("max-AR(1): p must lie in (0,1)");
  if (!(marginal_beta > 0.0) || !std::isfinite(marginal_beta)) {
    throw std::invalid_argument("max-AR(1): beta must be positive and finite");
  }
  if (innovation_beta_override &&
      (!(*innovation_beta_override > 0.0) || !std::isfinite(*innovation_beta_override))) {
    throw std::invalid_argument("max-AR(1): innovation beta must be positive and finite");
  }
}

double Ar1Spec::innovation_beta() const {
  return innovation_beta_override.value_or(stationary_innovation_shape(marginal_beta, GeoP(p)));
}

double innovation_cdf_from_marginal(double marginal_cdf, GeoP p) {
  const double q = p.value();
  return marginal_cdf / (q + (1.0 - q) * marginal_cdf);
}

double stationary_innovation_shape(double beta, GeoP p) { return p.value() * beta; }

namespace {
// The chain runs on v = F_eps(X). F_eps is continuous and strictly increasing
// on the support, so resets and maxima commute with it and a step costs two
// uniforms; X is recovered as quantile(innovations, v) only when emitted.
template <class Sink>
void run_chain(const Ar1Spec& spec, std::size_t n_steps, Ar1Init init, RandomSource& rng,
               Sink&& sink) {
  spec.validate();
  const GeoP p(spec.p);
  const MaxLaw innovations = spec.innovation_law();
  const double x0 =
      init.fixed_start ? *init.fixed_start : quantile(spec.marginal_law(), rng.uniform());
  double v = cdf(innovations, x0);
  bool at_start = true;  // state still equals x0 exactly
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double eps = rng.uniform();
    const double u = rng.uniform();
    if (u < p.value() || !(v > eps)) at_start = false;
    v = ar1_step(v, eps, u, p);
    sink([&] { return at_start ? x0 : quantile(innovations, v); });
  }
}
}  // namespace

std::vector<double> ar1_simulate(const Ar1Spec& spec, std::size_t n_steps, Ar1Init init,
                                 RandomSource& rng) {
  if (n_steps == 0) throw std::domain_error("ar1_simulate: n_steps must be at least 1");
  std::vector<double> out;
  out.reserve(n_steps);
  run_chain(spec, n_steps, init, rng, [&](auto value) { out.push_back(value()); });
  return out;
}

double ar1_state_at(const Ar1Spec& spec, std::size_t lag, Ar1Init init, RandomSource& rng) {
  if (lag == 0) {
    spec.validate();
    return init.fixed_start ? *init.fixed_start : quantile(spec.marginal_law(), rng.uniform());
  }
  std::size_t step = 0;
  double last = 0.0;
  run_chain(spec, lag, init, rng, [&](auto value) {
    if (++step == lag) last = value();
  });
  return last;
}

}  // namespace gmid
