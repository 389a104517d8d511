#include "gmid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gmid/extremal.hpp"
#include "gmid/max_ar1.hpp"
#include "gmid/max_algebra.hpp"
#include "gmid/stats.hpp"

namespace gmid {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAlgebraicTol = 1e-12;
constexpr double kConvergenceTol = 1e-3;

constexpr std::array kBetaLattice = {0.5, 1.0, 2.0};
constexpr std::array kPLattice = {0.2, 0.5, 0.9};

std::vector<Exponent> exponent_lattice() {
  return {Exponent::frechet(1.0), Exponent::frechet(2.0), Exponent::weibull(2.0),
          Exponent::gumbel()};
}

CdfFn fn(const CdfExpr& e) {
  return [e](double x) { return e.cdf(x); };
}
CdfFn fn(const MaxLaw& law) {
  return [law](double x) { return cdf(law, x); };
}

std::uint64_t stream_id(TheoremId id, std::uint64_t sub_case) {
  return (static_cast<std::uint64_t>(id) + 1) << 32 | sub_case;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

VerificationReport algebraic(TheoremId id, std::uint64_t seed, double discrepancy,
                             double tolerance, std::string detail) {
  return {id, CheckMode::Algebraic, discrepancy, tolerance, discrepancy < tolerance, seed,
          std::move(detail), std::nullopt};
}

// monotone violation and limit errors at the support ends
double validity_violation(const CdfFn& f, const Support& support,
                          std::span<const double> grid) {
  double worst = std::max(std::abs(f(support.lower)), std::abs(1.0 - f(support.upper)));
  for (std::size_t i = 1; i < grid.size(); ++i) {
    worst = std::max(worst, f(grid[i - 1]) - f(grid[i]));
  }
  return worst;
}

VerificationReport check_t2_1(std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& e : exponent_lattice()) {
    for (const double beta : kBetaLattice) {
      const auto ggm = MaxLaw::ggamma_mid(e, beta);
      const auto gm = MaxLaw::gamma_mid(e, beta);
      const auto grid = quantile_grid(ggm);
      const CdfFn mid_of_ggm = [&](double x) { return std::exp(-(1.0 / cdf(ggm, x) - 1.0)); };
      worst = std::max(worst, sup_norm_grid(mid_of_ggm, fn(gm), grid));
    }
  }
  return algebraic(TheoremId::T2_1, seed, worst, kAlgebraicTol,
                   "exp(-(1/F_ggm - 1)) vs gamma-mid cdf over beta x exponent lattice");
}

VerificationReport check_t2_2(std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& e : exponent_lattice()) {
    for (const double beta : kBetaLattice) {
      const auto ggm = MaxLaw::ggamma_mid(e, beta);
      const auto gm = MaxLaw::gamma_mid(e, beta);
      const auto grid = quantile_grid(ggm);
      worst = std::max(worst, validity_violation(fn(ggm), e.support(), grid));
      worst = std::max(worst, validity_violation(fn(gm), e.support(), grid));
    }
  }
  return algebraic(TheoremId::T2_2, seed, worst, kAlgebraicTol,
                   "gamma-mid and ggamma-mid both valid d.f.s (monotone, limits 0/1)");
}

// sup distances along n = 10, 100, 1000, 10000; must shrink and end below tol
VerificationReport convergence(TheoremId id, std::uint64_t seed, const MaxLaw& limit,
                               const std::function<CdfExpr(std::uint64_t)>& sequence) {
  const auto grid = quantile_grid(limit);
  std::vector<double> distances;
  for (const std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
    distances.push_back(sup_norm_grid(fn(sequence(n)), fn(limit), grid));
  }
  const bool shrinking = std::is_sorted(distances.rbegin(), distances.rend());
  std::string detail = "sup distance at n=10..1e4:";
  for (const double d : distances) detail += " " + fmt(d);
  if (!shrinking) detail += " (not monotone)";
  return algebraic(id, seed, shrinking ? distances.back() : kInf, kConvergenceTol, detail);
}

VerificationReport check_t2_3(std::uint64_t seed) {
  const auto e = Exponent::frechet(1.0);
  return convergence(TheoremId::T2_3, seed, MaxLaw::ggamma_mid(e, 1.0),
                     [&](std::uint64_t n) { return limit_geo_gamma(1.0, n, e); });
}

VerificationReport check_t2_4(std::uint64_t seed) {
  const auto e = Exponent::frechet(1.0);
  return convergence(TheoremId::T2_4, seed, MaxLaw::gamma_mid(e, 1.0), [&](std::uint64_t n) {
    return n_max(CdfExpr::of(MaxLaw::ggamma_mid(e, 1.0 / static_cast<double>(n))), n);
  });
}

VerificationReport check_t2_5(std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& e : {Exponent::frechet(1.0), Exponent::frechet(2.0), Exponent::weibull(1.0),
                        Exponent::weibull(2.0)}) {
    const auto law = MaxLaw::gmid(e);
    const auto grid = quantile_grid(law);
    for (const double p : kPLattice) {
      const double b = semi_stable_scale(GeoP(p), e);
      const CdfFn rescaled = [&](double x) { return cdf(law, b * x); };
      worst = std::max(worst, sup_norm_grid(fn(geo_max(CdfExpr::of(law), GeoP(p))), rescaled, grid));
    }
  }
  return algebraic(TheoremId::T2_5, seed, worst, kAlgebraicTol,
                   "geo-max of gmid equals gmid at b x (Frechet and Weibull branches)");
}

VerificationReport check_t2_6(std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& e : exponent_lattice()) {
    const auto h = CdfExpr::of(MaxLaw::gmid(e));
    const auto grid = quantile_grid(MaxLaw::gmid(e));
    for (const double p : kPLattice) {
      worst = std::max(worst, sup_norm_grid(fn(scale_exponent(h, 1.0 / p)),
                                            fn(geo_max(h, GeoP(p))), grid));
    }
  }
  return algebraic(TheoremId::T2_6, seed, worst, kAlgebraicTol,
                   "1/(1+a psi) equals geo-max with p=1/a, a in {5, 2, 1/0.9}");
}

VerificationReport check_t2_7(std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& e : exponent_lattice()) {
    for (const double beta : kBetaLattice) {
      for (const double p : kPLattice) {
        const auto composed = geo_max(CdfExpr::of(MaxLaw::ggamma_mid(e, beta)), GeoP(p));
        const auto target = MaxLaw::ggamma_mid(e, beta / p);
        worst = std::max(worst, sup_norm_grid(fn(composed), fn(target), quantile_grid(target)));
      }
    }
  }
  return algebraic(TheoremId::T2_7, seed, worst, kAlgebraicTol,
                   "geo-max(ggamma-mid(beta), p) vs ggamma-mid(beta/p), lattice {0.5,1,2}x{0.2,0.5,0.9}");
}

VerificationReport check_r2_1(std::uint64_t seed) {
  double identity = 0.0;
  double validity = 0.0;
  for (const auto& e : exponent_lattice()) {
    const auto base = CdfExpr::of(MaxLaw::base(e));
    const auto grid = quantile_grid(MaxLaw::ggamma_mid(e, 1.0));
    identity = std::max(identity, sup_norm_grid(fn(iterate_transform(base)),
                                                fn(MaxLaw::gmid(e)), grid));
    identity = std::max(identity, sup_norm_grid(fn(iterate_transform(iterate_transform(base))),
                                                fn(MaxLaw::ggamma_mid(e, 1.0)), grid));
    for (const auto kind : {LawKind::Base, LawKind::GMID, LawKind::GammaMID, LawKind::GGammaMID}) {
      auto f = CdfExpr::of(MaxLaw::make(kind, e, 1.5));
      for (int k = 0; k < 3; ++k) {
        f = iterate_transform(f);
        validity = std::max(validity, validity_violation(fn(f), e.support(), grid));
      }
    }
  }
  return algebraic(TheoremId::R2_1, seed, std::max(identity, validity), kAlgebraicTol,
                   "iterate(base)=gmid, iterate^2(base)=ggamma-mid(1): " + fmt(identity) +
                       "; 3 iterates valid from each kind: " + fmt(validity));
}

struct WorstKs {
  double statistic = 0.0;
  double critical_value = 0.0;
  std::string where;

  void take(const KSReport& r, const std::string& label) {
    critical_value = r.critical_value;
    if (r.statistic >= statistic) {
      statistic = r.statistic;
      where = label;
    }
  }
};

VerificationReport monte_carlo(TheoremId id, std::uint64_t seed, const WorstKs& worst,
                               double algebraic_gap, std::string detail) {
  detail += "; worst KS " + fmt(worst.statistic) + " at " + worst.where;
  detail += "; algebraic identity gap " + fmt(algebraic_gap);
  const double discrepancy = algebraic_gap < kAlgebraicTol ? worst.statistic : kInf;
  return {id, CheckMode::MonteCarlo, discrepancy, worst.critical_value,
          discrepancy < worst.critical_value, seed, std::move(detail), std::nullopt};
}

VerificationReport check_t3_1(std::uint64_t seed) {
  const auto e = Exponent::frechet(1.0);
  WorstKs worst;
  double gap = 0.0;
  std::uint64_t sub_case = 0;
  for (const double beta : kBetaLattice) {
    const ExtremalSpec spec{MaxLaw::gamma_mid(e, beta)};
    const auto sub = SubordinatorSpec::gamma_process();
    const auto target = MaxLaw::ggamma_mid(e, beta);
    const CdfFn compound = [&](double x) { return compound_marginal_cdf(spec, sub, 1.0, x); };
    gap = std::max(gap, sup_norm_grid(compound, fn(target), quantile_grid(target)));
    RandomSource rng(seed, stream_id(TheoremId::T3_1, sub_case++));
    const auto draws = compound_simulate(spec, sub, 1.0, rng, kMonteCarloSize);
    worst.take(ks_one_sample(draws, fn(target)), "beta=" + fmt(beta));
  }
  return monte_carlo(TheoremId::T3_1, seed, worst, gap,
                     "gamma-mid(beta) EP under a gamma-process clock at t=1 vs ggamma-mid(beta)");
}

VerificationReport check_t3_2(std::uint64_t seed) {
  const auto e = Exponent::frechet(1.0);
  WorstKs worst;
  double gap = 0.0;
  std::uint64_t sub_case = 0;
  for (const double beta : kBetaLattice) {
    const ExtremalSpec spec{MaxLaw::base(e)};
    const auto sub = SubordinatorSpec::ggamma_at_unit_time(beta);
    const auto target = MaxLaw::ggamma_mid(e, beta);
    const CdfFn compound = [&](double x) { return compound_marginal_cdf(spec, sub, 1.0, x); };
    gap = std::max(gap, sup_norm_grid(compound, fn(target), quantile_grid(target)));
    RandomSource rng(seed, stream_id(TheoremId::T3_2, sub_case++));
    const auto draws = compound_simulate(spec, sub, 1.0, rng, kMonteCarloSize);
    worst.take(ks_one_sample(draws, fn(target)), "beta=" + fmt(beta));
  }
  return monte_carlo(TheoremId::T3_2, seed, worst, gap,
                     "base EP under a ggamma(beta) clock at t=1 vs ggamma-mid(beta)");
}

std::vector<double> stationary_draws(const Ar1Spec& spec, std::size_t chains, std::size_t lag,
                                     std::uint64_t seed, std::uint64_t stream) {
  RandomSource rng(seed, stream);
  std::vector<double> out;
  out.reserve(chains);
  for (std::size_t c = 0; c < chains; ++c) {
    out.push_back(ar1_state_at(spec, lag, Ar1Init::stationary(), rng));
  }
  return out;
}

VerificationReport check_t3_3(std::uint64_t seed) {
  constexpr std::size_t kLag = 100;
  const auto e = Exponent::frechet(1.0);
  WorstKs worst;
  double gap = 0.0;
  std::uint64_t sub_case = 0;
  for (const double beta : kBetaLattice) {
    for (const double p : kPLattice) {
      const Ar1Spec spec{p, beta, e, std::nullopt};
      const auto marginal = spec.marginal_law();
      const auto innovation = spec.innovation_law();
      const auto grid = quantile_grid(marginal);
      const CdfFn fixed_point = [&](double x) {
        const double f_eps = cdf(innovation, x);
        return p * f_eps + (1.0 - p) * cdf(marginal, x) * f_eps;
      };
      gap = std::max(gap, sup_norm_grid(fixed_point, fn(marginal), grid));
      const auto draws =
          stationary_draws(spec, kMonteCarloSize, kLag, seed, stream_id(TheoremId::T3_3, sub_case++));
      worst.take(ks_one_sample(draws, fn(marginal)), "beta=" + fmt(beta) + ", p=" + fmt(p));
    }
  }
  auto report = monte_carlo(TheoremId::T3_3, seed, worst, gap,
                            "stationary max-AR(1) at lag 100 with ggamma-mid(p beta) innovations");

  // printed innovation shape beta/p must be rejected
  const Ar1Spec printed{0.5, 1.0, e, 1.0 / 0.5};
  const auto draws = stationary_draws(printed, kMonteCarloSize, kLag, seed,
                                      stream_id(TheoremId::T3_3, 1000));
  const auto ks = ks_one_sample(draws, fn(printed.marginal_law()));
  report.negative_control = NegativeControl{
      "innovations ggamma-mid(beta/p) with beta=1, p=0.5", ks.statistic, ks.critical_value,
      !ks.pass};
  if (ks.pass) {
    report.detail += "; negative control NOT rejected";
    report.discrepancy = kInf;
    report.pass = false;
  }
  return report;
}
}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1: return "T2_1";
    case TheoremId::T2_2: return "T2_2";
    case TheoremId::T2_3: return "T2_3";
    case TheoremId::T2_4: return "T2_4";
    case TheoremId::T2_5: return "T2_5";
    case TheoremId::T2_6: return "T2_6";
    case TheoremId::T2_7: return "T2_7";
    case TheoremId::R2_1: return "R2_1";
    case TheoremId::T3_1: return "T3_1";
    case TheoremId::T3_2: return "T3_2";
    case TheoremId::T3_3: return "T3_3";
  }
  return "unknown";
}

TheoremId parse_theorem(std::string_view name) {
  for (const auto id : kAllTheorems) {
    if (to_string(id) == name) return id;
  }
  throw std::domain_error("unknown theorem id '" + std::string(name) + "'");
}

std::string_view to_string(CheckMode mode) {
  return mode == CheckMode::Algebraic ? "algebraic" : "monte-carlo";
}

VerificationReport verify(TheoremId id, std::uint64_t seed) {
  switch (id) {
    case TheoremId::T2_1: return check_t2_1(seed);
    case TheoremId::T2_2: return check_t2_2(seed);
    case TheoremId::T2_3: return check_t2_3(seed);
    case TheoremId::T2_4: return check_t2_4(seed);
    case TheoremId::T2_5: return check_t2_5(seed);
    case TheoremId::T2_6: return check_t2_6(seed);
    case TheoremId::T2_7: return check_t2_7(seed);
    case TheoremId::R2_1: return check_r2_1(seed);
    case TheoremId::T3_1: return check_t3_1(seed);
    case TheoremId::T3_2: return check_t3_2(seed);
    case TheoremId::T3_3: return check_t3_3(seed);
  }
  throw std::domain_error("unknown theorem id");
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j = {
      {"theorem", to_string(report.theorem)},
      {"mode", to_string(report.mode)},
      // JSON has no infinity; an unbounded discrepancy serializes as null
      {"discrepancy", std::isfinite(report.discrepancy) ? nlohmann::json(report.discrepancy)
                                                        : nlohmann::json(nullptr)},
      {"tolerance", report.tolerance},
      {"pass", report.pass},
      {"seed", report.seed},
      {"detail", report.detail},
  };
  if (report.negative_control) {
    const auto& nc = *report.negative_control;
    j["negative_control"] = {{"description", nc.description},
                             {"statistic", nc.statistic},
                             {"critical_value", nc.critical_value},
                             {"rejected", nc.rejected}};
  }
  return j;
}

}  // namespace gmid
