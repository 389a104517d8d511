#include "gmid/law.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gmid/errors.hpp"

namespace gmid {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// exposure s = psi(x) solving the kind's cdf form at u = exp(-w), in log space
double log_exponent_from_exposure(const MaxLaw& law, double log_w) {
  switch (law.kind()) {
    case LawKind::Base:
      return log_w;
    case LawKind::GMID:
      return log_expm1(std::exp(log_w));
    case LawKind::GammaMID:
      return log_expm1(std::exp(log_w) / law.beta());
    case LawKind::GGammaMID: {
      const double w = std::exp(log_w);
      // expm1(w) overflows long before w does; go through its log
      const double log_inner = w > 700.0 ? w + std::log1p(-std::exp(-w)) - std::log(law.beta())
                                         : std::log(std::expm1(w) / law.beta());
      return log_expm1(std::exp(log_inner));
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}
}  // namespace

std::string_view to_string(LawKind kind) {
  switch (kind) {
    case LawKind::Base: return "base";
    case LawKind::GMID: return "gmid";
    case LawKind::GammaMID: return "gamma-mid";
    case LawKind::GGammaMID: return "ggamma-mid";
  }
  return "unknown";
}

LawKind parse_kind(std::string_view name) {
  if (name == "base") return LawKind::Base;
  if (name == "gmid") return LawKind::GMID;
  if (name == "gamma-mid") return LawKind::GammaMID;
  if (name == "ggamma-mid") return LawKind::GGammaMID;
  throw std::invalid_argument("unknown law kind '" + std::string(name) + "'");
}

MaxLaw MaxLaw::make(LawKind kind, Exponent e, double beta) {
  if (kind == LawKind::Base || kind == LawKind::GMID) return {kind, e, 1.0};
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("law: beta must be positive and finite, got " +
                                std::to_string(beta));
  }
  return {kind, e, beta};
}

double log_expm1(double y) {
  if (y > 36.0) return y + std::log1p(-std::exp(-y));
  return std::log(std::expm1(y));
}

double log1p_exp(double y) {
  if (y > 36.0) return y + std::log1p(std::exp(-y));
  return std::log1p(std::exp(y));
}

double log_log1p_exp(double y) {
  if (y < -36.0) return y;  // log1p(e^y) = e^y (1 - e^y / 2 + ...)
  return std::log(log1p_exp(y));
}

double log_neg_log_cdf(const MaxLaw& law, double x) {
  const double log_s = law.exponent().log_eval(x);
  if (log_s == kInf || log_s == -kInf) return log_s;
  switch (law.kind()) {
    case LawKind::Base: return log_s;
    case LawKind::GMID: return log_log1p_exp(log_s);
    case LawKind::GammaMID: return std::log(law.beta()) + log_log1p_exp(log_s);
    case LawKind::GGammaMID: return std::log(std::log1p(law.beta() * log1p_exp(log_s)));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double neg_log_cdf(const MaxLaw& law, double x) {
  // through log psi so that exposures beyond double range stay exact
  const double log_s = law.exponent().log_eval(x);
  if (log_s == kInf) return kInf;
  switch (law.kind()) {
    case LawKind::Base: return std::exp(log_s);
    case LawKind::GMID: return log1p_exp(log_s);
    case LawKind::GammaMID: return law.beta() * log1p_exp(log_s);
    case LawKind::GGammaMID: return std::log1p(law.beta() * log1p_exp(log_s));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double cdf(const MaxLaw& law, double x) { return std::exp(-neg_log_cdf(law, x)); }

double quantile_from_log_exposure(const MaxLaw& law, double log_w) {
  return law.exponent().inverse_log(log_exponent_from_exposure(law, log_w));
}

double quantile(const MaxLaw& law, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("quantile: u must lie in (0,1), got " + std::to_string(u));
  }
  return quantile_from_log_exposure(law, std::log(-std::log(u)));
}

double lt_ggamma(double beta, double lam) { return 1.0 / (1.0 + beta * std::log1p(lam)); }

double log_sample_gamma(double shape, RandomSource& rng) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::domain_error("gamma: shape must be positive and finite, got " +
                            std::to_string(shape));
  }
  if (shape < 1.0) {
    // G(a) = G(a + 1) * U^(1/a)
    return log_sample_gamma(shape + 1.0, rng) + std::log(rng.uniform()) / shape;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = rng.normal();
    const double t = 1.0 + c * z;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double log_u = std::log(rng.uniform());
    if (log_u < 0.5 * z * z + d - d * v + d * std::log(v)) return std::log(d) + std::log(v);
  }
}

double sample_gamma(double shape, RandomSource& rng) {
  return std::exp(log_sample_gamma(shape, rng));
}

double log_sample_ggamma(double beta, RandomSource& rng) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::domain_error("ggamma: beta must be positive and finite, got " +
                            std::to_string(beta));
  }
  double shape = 0.0;
  do {
    shape = beta * rng.exponential();
  } while (shape == 0.0);
  return log_sample_gamma(shape, rng);
}

double sample_ggamma(double beta, RandomSource& rng) {
  return std::exp(log_sample_ggamma(beta, rng));
}

std::vector<double> sample_inverse(const MaxLaw& law, RandomSource& rng, std::size_t n) {
  if (n == 0) throw std::domain_error("sample_inverse: n must be at least 1");
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(quantile(law, rng.uniform()));
  return out;
}

std::vector<double> sample_latent(const MaxLaw& law, RandomSource& rng, std::size_t n) {
  if (law.kind() == LawKind::Base) {
    throw UnsupportedError("sample_latent: the base kind has no latent mixture route");
  }
  if (n == 0) throw std::domain_error("sample_latent: n must be at least 1");
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_t = 0.0;
    switch (law.kind()) {
      case LawKind::GMID: log_t = std::log(rng.exponential()); break;
      case LawKind::GammaMID: log_t = log_sample_gamma(law.beta(), rng); break;
      case LawKind::GGammaMID: log_t = log_sample_ggamma(law.beta(), rng); break;
      case LawKind::Base: break;
    }
    // conditional d.f. exp(-T psi): psi(X) = -log(U) / T
    const double log_s = std::log(-std::log(rng.uniform())) - log_t;
    out.push_back(law.exponent().inverse_log(log_s));
  }
  return out;
}

}  // namespace gmid
