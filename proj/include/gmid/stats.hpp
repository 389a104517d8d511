#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gmid/law.hpp"

namespace gmid {

using CdfFn = std::function<double(double)>;

/// Asymptotic Kolmogorov constant c(0.01).
inline constexpr double kKsConstant01 = 1.628;

struct KSReport {
  double statistic = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;  // 0 for the one-sample test
  double critical_value = 0.0;
  double alpha_level = 0.01;
  bool pass = false;
};

/// c(0.01) / sqrt(n).
double ks_band_one_sample(std::size_t n);
/// c(0.01) * sqrt((n + m) / (n m)).
double ks_band_two_sample(std::size_t n, std::size_t m);

/// Fraction of samples <= x. Throws std::domain_error on empty input.
double ecdf(std::span<const double> samples, double x);

/// Throws std::domain_error on empty input.
KSReport ks_one_sample(std::span<const double> samples, const CdfFn& cdf_fn);
KSReport ks_two_sample(std::span<const double> a, std::span<const double> b);

/// max |f(x) - g(x)| over the grid. Throws std::domain_error on an empty grid.
double sup_norm_grid(const CdfFn& f, const CdfFn& g, std::span<const double> grid);

/// count points quantile(law, u), u evenly spaced on [u_lo, u_hi].
std::vector<double> quantile_grid(const MaxLaw& law, std::size_t count = 1000,
                                  double u_lo = 0.001, double u_hi = 0.999);
/// count evenly spaced points on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

}  // namespace gmid
