#include "gmid/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmid {

double ks_band_one_sample(std::size_t n) {
  return kKsConstant01 / std::sqrt(static_cast<double>(n));
}

double ks_band_two_sample(std::size_t n, std::size_t m) {
  const auto dn = static_cast<double>(n);
  const auto dm = static_cast<double>(m);
  return kKsConstant01 * std::sqrt((dn + dm) / (dn * dm));
}

double ecdf(std::span<const double> samples, double x) {
  if (samples.empty()) throw std::domain_error("ecdf: empty sample");
  const auto below = std::count_if(samples.begin(), samples.end(), [x](double v) { return v <= x; });
  return static_cast<double>(below) / static_cast<double>(samples.size());
}

KSReport ks_one_sample(std::span<const double> samples, const CdfFn& cdf_fn) {
  if (samples.empty()) throw std::domain_error("ks_one_sample: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf_fn(sorted[i]);
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  KSReport report;
  report.statistic = d;
  report.n = sorted.size();
  report.critical_value = ks_band_one_sample(sorted.size());
  report.pass = d < report.critical_value;
  return report;
}

KSReport ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::domain_error("ks_two_sample: empty sample");
  std::vector<double> xs(a.begin(), a.end());
  std::vector<double> ys(b.begin(), b.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const auto n = static_cast<double>(xs.size());
  const auto m = static_cast<double>(ys.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  // walk the pooled order, stepping past ties on both sides before comparing
  while (i < xs.size() && j < ys.size()) {
    const double v = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] <= v) ++i;
    while (j < ys.size() && ys[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  KSReport report;
  report.statistic = d;
  report.n = xs.size();
  report.m = ys.size();
  report.critical_value = ks_band_two_sample(xs.size(), ys.size());
  report.pass = d < report.critical_value;
  return report;
}

double sup_norm_grid(const CdfFn& f, const CdfFn& g, std::span<const double> grid) {
  if (grid.empty()) throw std::domain_error("sup_norm_grid: empty grid");
  double d = 0.0;
  for (const double x : grid) d = std::max(d, std::abs(f(x) - g(x)));
  return d;
}

std::vector<double> quantile_grid(const MaxLaw& law, std::size_t count, double u_lo,
                                  double u_hi) {
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u =
        count == 1 ? u_lo
                   : u_lo + (u_hi - u_lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    grid.push_back(quantile(law, u));
  }
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(count == 1 ? lo
                              : lo + (hi - lo) * static_cast<double>(i) /
                                         static_cast<double>(count - 1));
  }
  return grid;
}

}  // namespace gmid
