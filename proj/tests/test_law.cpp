#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gmid/errors.hpp"
#include "gmid/law.hpp"
#include "gmid/law_json.hpp"
#include "gmid/stats.hpp"
#include "oracle.hpp"

using gmid::Exponent;
using gmid::LawKind;
using gmid::MaxLaw;
using gmid::RandomSource;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const auto kFrechet1 = Exponent::frechet(1.0);

// reference values from tests/oracles/oracle_values.py (mpmath, 40 digits)
constexpr double kExpMinus1 = 0.36787944117144232;
constexpr double kInvOnePlusLn2 = 0.59061610914964125;
constexpr double kTwoLn2 = 1.3862943611198906;
constexpr double kInvEMinus1 = 0.58197670686932642;
constexpr double kInvOnePlusTwoLn2 = 0.41905978419640521;

std::vector<MaxLaw> all_laws(const Exponent& e, double beta) {
  return {MaxLaw::base(e), MaxLaw::gmid(e), MaxLaw::gamma_mid(e, beta),
          MaxLaw::ggamma_mid(e, beta)};
}

std::vector<Exponent> families() {
  return {Exponent::frechet(1.0), Exponent::frechet(2.0), Exponent::weibull(2.0),
          Exponent::gumbel()};
}

gmid::CdfFn fn(const MaxLaw& law) {
  return [law](double x) { return gmid::cdf(law, x); };
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}
}  // namespace

TEST_CASE("cdf examples") {
  CHECK(gmid::cdf(MaxLaw::base(kFrechet1), 1.0) == doctest::Approx(kExpMinus1).epsilon(1e-14));
  CHECK(gmid::cdf(MaxLaw::gamma_mid(kFrechet1, 2.0), 1.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(gmid::cdf(MaxLaw::ggamma_mid(kFrechet1, 1.0), 1.0) ==
        doctest::Approx(kInvOnePlusLn2).epsilon(1e-14));
  for (const auto& law : all_laws(kFrechet1, 1.3)) CHECK(gmid::cdf(law, -1.0) == 0.0);
}

TEST_CASE("cdf agrees with the naive closed forms") {
  for (const double beta : {0.5, 1.0, 2.0}) {
    for (const double x : gmid::linear_grid(0.05, 20.0, 400)) {
      const double psi = oracle::psi_frechet(x, 1.0);
      CHECK(gmid::cdf(MaxLaw::base(kFrechet1), x) == doctest::Approx(oracle::base_cdf(psi)));
      CHECK(gmid::cdf(MaxLaw::gmid(kFrechet1), x) == doctest::Approx(oracle::gmid_cdf(psi)));
      CHECK(gmid::cdf(MaxLaw::gamma_mid(kFrechet1, beta), x) ==
            doctest::Approx(oracle::gamma_mid_cdf(psi, beta)));
      CHECK(gmid::cdf(MaxLaw::ggamma_mid(kFrechet1, beta), x) ==
            doctest::Approx(oracle::ggamma_mid_cdf(psi, beta)));
    }
  }
}

TEST_CASE("neg_log_cdf examples") {
  CHECK(gmid::neg_log_cdf(MaxLaw::base(kFrechet1), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gmid::neg_log_cdf(MaxLaw::gamma_mid(kFrechet1, 2.0), 1.0) ==
        doctest::Approx(kTwoLn2).epsilon(1e-14));
  for (const auto& e : families()) {
    for (const auto& law : all_laws(e, 0.7)) CHECK(gmid::neg_log_cdf(law, kInf) == 0.0);
  }
}

TEST_CASE("neg_log_cdf keeps relative precision where cdf is 1 - tiny") {
  // 1 - cdf would cancel; -log cdf = beta psi to leading order
  const auto law = MaxLaw::gamma_mid(kFrechet1, 2.0);
  CHECK(gmid::neg_log_cdf(law, 1e20) == doctest::Approx(2e-20).epsilon(1e-12));
}

TEST_CASE("quantile examples") {
  CHECK(gmid::quantile(MaxLaw::gamma_mid(kFrechet1, 2.0), 0.25) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gmid::quantile(MaxLaw::ggamma_mid(kFrechet1, 1.0), 0.5) ==
        doctest::Approx(kInvEMinus1).epsilon(1e-14));
  CHECK(gmid::quantile(MaxLaw::gmid(kFrechet1), 0.5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quantile rejects u outside (0,1)") {
  const auto law = MaxLaw::gmid(kFrechet1);
  for (const double u : {0.0, 1.0, -0.2, 1.5, std::nan("")}) {
    CHECK_THROWS_AS(gmid::quantile(law, u), std::domain_error);
  }
}

TEST_CASE("quantile matches bisection on the naive d.f.") {
  for (const double beta : {0.5, 2.0}) {
    const auto law = MaxLaw::ggamma_mid(kFrechet1, beta);
    const auto naive = [beta](double x) {
      return oracle::ggamma_mid_cdf(oracle::psi_frechet(x, 1.0), beta);
    };
    for (const double u : {0.05, 0.3, 0.5, 0.8, 0.97}) {
      CHECK(gmid::quantile(law, u) ==
            doctest::Approx(oracle::bisect(naive, u, 1e-12, 1e12)).epsilon(1e-9));
    }
  }
}

TEST_CASE("cdf(quantile(u)) = u for all kinds on a 1e3 u-grid") {
  // below u ~ 1/(1 + 744 alpha beta) the Frechet-branch quantile of the
  // G-gamma law is smaller than the least positive double
  const auto us = gmid::linear_grid(0.005, 0.995, 1000);
  for (const auto& e : families()) {
    for (const double beta : {0.5, 1.0, 2.0}) {
      for (const auto& law : all_laws(e, beta)) {
        double worst = 0.0;
        for (const double u : us) {
          worst = std::max(worst, std::abs(gmid::cdf(law, gmid::quantile(law, u)) - u));
        }
        CAPTURE(gmid::to_string(law.kind()));
        CAPTURE(gmid::to_string(e.family()));
        CHECK(worst <= 1e-10);
      }
    }
  }
}

TEST_CASE("valid d.f.: monotone with limits 0 and 1") {
  for (const auto& e : families()) {
    for (const auto& law : all_laws(e, 0.8)) {
      CHECK(gmid::cdf(law, e.support().lower) == 0.0);
      CHECK(gmid::cdf(law, e.support().upper) == 1.0);
      const auto grid = gmid::quantile_grid(law, 500);
      for (std::size_t i = 1; i < grid.size(); ++i) {
        REQUIRE(gmid::cdf(law, grid[i - 1]) <= gmid::cdf(law, grid[i]));
      }
    }
  }
}

TEST_CASE("exp(-(1/F - 1)) of the G-gamma law is the gamma-mid d.f.") {
  for (const auto& e : families()) {
    for (const double beta : {0.5, 1.0, 2.0}) {
      const auto ggm = MaxLaw::ggamma_mid(e, beta);
      const auto gm = MaxLaw::gamma_mid(e, beta);
      for (const double x : gmid::quantile_grid(ggm, 1000)) {
        const double mid = std::exp(-(1.0 / gmid::cdf(ggm, x) - 1.0));
        CHECK(std::abs(mid - gmid::cdf(gm, x)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("law validation and kind names") {
  CHECK_THROWS_AS(MaxLaw::gamma_mid(kFrechet1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(MaxLaw::ggamma_mid(kFrechet1, -1.0), std::invalid_argument);
  CHECK(MaxLaw::make(LawKind::GMID, kFrechet1, -3.0).beta() == 1.0);
  CHECK(gmid::parse_kind("ggamma-mid") == LawKind::GGammaMID);
  CHECK_THROWS_AS(gmid::parse_kind("gev"), std::invalid_argument);
}

TEST_CASE("random source determinism and stream separation") {
  RandomSource a(7, 0);
  RandomSource b(7, 0);
  RandomSource c(7, 1);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double ua = a.uniform();
    CHECK(ua == b.uniform());
    differs = differs || ua != c.uniform();
    CHECK(ua > 0.0);
    CHECK(ua < 1.0);
  }
  CHECK(differs);
}

TEST_CASE("sample_inverse") {
  const auto law = MaxLaw::ggamma_mid(kFrechet1, 1.0);
  RandomSource rng(1);
  CHECK_THROWS_AS(gmid::sample_inverse(law, rng, 0), std::domain_error);

  RandomSource r1(99);
  RandomSource r2(99);
  CHECK(gmid::sample_inverse(law, r1, 5) == gmid::sample_inverse(law, r2, 5));

  RandomSource big(2024);
  const auto draws = gmid::sample_inverse(law, big, 100000);
  CHECK(gmid::ks_one_sample(draws, fn(law)).statistic < 0.01);
}

TEST_CASE("sample_gamma") {
  RandomSource rng(5);
  CHECK_THROWS_AS(gmid::sample_gamma(0.0, rng), std::domain_error);
  CHECK_THROWS_AS(gmid::sample_gamma(-1.0, rng), std::domain_error);

  SUBCASE("shape 1 is the unit exponential") {
    std::vector<double> g;
    std::vector<double> ex;
    RandomSource other(6);
    for (int i = 0; i < 100000; ++i) {
      g.push_back(gmid::sample_gamma(1.0, rng));
      ex.push_back(-std::log(other.uniform()));
    }
    CHECK(gmid::ks_two_sample(g, ex).pass);
  }
  SUBCASE("means within 3 standard errors") {
    // variance = shape: 3 sqrt(shape / 1e5)
    for (const auto& [shape, band] : {std::pair{2.0, 0.014}, std::pair{0.3, 0.0052}}) {
      std::vector<double> g;
      for (int i = 0; i < 100000; ++i) g.push_back(gmid::sample_gamma(shape, rng));
      CHECK(std::abs(mean(g) - shape) < band);
    }
  }
  SUBCASE("tiny shapes stay representable in log space") {
    const double lg = gmid::log_sample_gamma(1e-12, rng);
    CHECK(std::isfinite(lg));
  }
}

TEST_CASE("sample_ggamma Laplace transform") {
  RandomSource rng(11);
  CHECK_THROWS_AS(gmid::sample_ggamma(0.0, rng), std::domain_error);
  // 3 sigma Monte-Carlo band over 1e6 draws
  for (const auto& [beta, expected] :
       {std::pair{1.0, kInvOnePlusLn2}, std::pair{2.0, kInvOnePlusTwoLn2}}) {
    double total = 0.0;
    double at_zero = 0.0;
    for (int i = 0; i < 1000000; ++i) {
      const double t = gmid::sample_ggamma(beta, rng);
      CHECK_FALSE(t < 0.0);
      total += std::exp(-t);
      at_zero += std::exp(-0.0 * t);
    }
    CHECK(std::abs(total / 1e6 - expected) < 0.003);
    CHECK(at_zero / 1e6 == 1.0);
  }
}

TEST_CASE("lt_ggamma") {
  CHECK(gmid::lt_ggamma(3.7, 0.0) == 1.0);
  CHECK(gmid::lt_ggamma(1.0, std::exp(1.0) - 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gmid::lt_ggamma(2.0, 1.0) == doctest::Approx(kInvOnePlusTwoLn2).epsilon(1e-14));
}

TEST_CASE("sample_latent") {
  RandomSource rng(3);
  CHECK_THROWS_AS(gmid::sample_latent(MaxLaw::base(kFrechet1), rng, 10), gmid::UnsupportedError);
  CHECK_THROWS_AS(gmid::sample_latent(MaxLaw::gmid(kFrechet1), rng, 0), std::domain_error);

  SUBCASE("agrees with the inverse route") {
    const auto law = MaxLaw::ggamma_mid(kFrechet1, 1.0);
    RandomSource a(100);
    RandomSource b(200);
    const auto inv = gmid::sample_inverse(law, a, 100000);
    const auto lat = gmid::sample_latent(law, b, 100000);
    CHECK(gmid::ks_two_sample(inv, lat).statistic < 0.0122);
  }
  SUBCASE("gamma-mid(1) latent route is the gmid latent route") {
    RandomSource a(300);
    RandomSource b(400);
    const auto gm = gmid::sample_latent(MaxLaw::gamma_mid(kFrechet1, 1.0), a, 100000);
    const auto g = gmid::sample_latent(MaxLaw::gmid(kFrechet1), b, 100000);
    CHECK(gmid::ks_two_sample(gm, g).pass);
  }
  SUBCASE("extreme latent draws stay above the support bottom") {
    // small beta makes near-zero latent T (huge exposures) common
    const auto law = MaxLaw::ggamma_mid(kFrechet1, 0.05);
    RandomSource r(8);
    for (const double x : gmid::sample_latent(law, r, 20000)) REQUIRE(x > 0.0);
  }
}

TEST_CASE("sampler cross-validation on 9 of 10 seeds") {
  for (const auto& law : {MaxLaw::gmid(kFrechet1), MaxLaw::gamma_mid(kFrechet1, 0.5),
                          MaxLaw::ggamma_mid(kFrechet1, 2.0)}) {
    int passes = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      RandomSource a(seed, 0);
      RandomSource b(seed, 1);
      const auto inv = gmid::sample_inverse(law, a, 100000);
      const auto lat = gmid::sample_latent(law, b, 100000);
      passes += gmid::ks_two_sample(inv, lat).pass ? 1 : 0;
    }
    CAPTURE(gmid::to_string(law.kind()));
    CHECK(passes >= 9);
  }
}

TEST_CASE("law JSON descriptor") {
  for (const auto& e : families()) {
    for (const auto& law : all_laws(e, 1.25)) {
      CHECK(gmid::law_from_json(gmid::law_to_json(law)) == law);
    }
  }
  const auto j = gmid::law_to_json(MaxLaw::ggamma_mid(kFrechet1, 2.0));
  CHECK(j.at("kind") == "ggamma-mid");
  CHECK(j.at("family") == "frechet");
  CHECK(j.at("beta") == 2.0);
  CHECK_THROWS_AS(gmid::law_from_json({{"kind", "ggamma-mid"}, {"family", "frechet"}, {"alpha", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gmid::law_from_json({{"kind", "gmid"}}), std::invalid_argument);
  CHECK(gmid::law_from_json({{"kind", "gmid"}, {"family", "gumbel"}}) ==
        MaxLaw::gmid(Exponent::gumbel()));
}
