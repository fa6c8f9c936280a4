#include "ringburst/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ringburst {

WilsonInterval wilson_ci(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("wilson_ci: zero trials");
  if (successes > trials)
    throw std::invalid_argument("wilson_ci: successes > trials");
  const double z = 1.959963984540054;  // Phi^{-1}(0.975)
  const double m = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / m;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / m;
  const double center = (ph + z2 / (2.0 * m)) / denom;
  const double half =
      z * std::sqrt(ph * (1.0 - ph) / m + z2 / (4.0 * m * m)) / denom;
  return {ph, center - half, center + half};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

MeanVar mean_var(const std::vector<double>& xs) {
  MeanVar r;
  r.count = xs.size();
  if (xs.empty()) return r;
  double s = 0;
  for (double x : xs) s += x;
  r.mean = s / static_cast<double>(xs.size());
  if (xs.size() < 2) return r;
  double ss = 0;
  for (double x : xs) ss += (x - r.mean) * (x - r.mean);
  r.variance = ss / static_cast<double>(xs.size() - 1);
  return r;
}

double ks_statistic_normal(std::vector<double> xs, double mu, double sigma) {
  if (xs.empty()) throw std::invalid_argument("ks: empty sample");
  if (!(sigma > 0.0)) throw std::invalid_argument("ks: sigma must be > 0");
  std::sort(xs.begin(), xs.end());
  const double m = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = normal_cdf((xs[i] - mu) / sigma);
    d = std::max(d, std::abs(f - static_cast<double>(i) / m));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / m - f));
  }
  return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

ChiSquare chi_square(const std::vector<double>& observed,
                     const std::vector<double>& expected,
                     double min_expected) {
  if (observed.size() != expected.size() || observed.empty())
    throw std::invalid_argument("chi_square: size mismatch");
  std::vector<double> obs, exp;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!exp.empty() && exp.back() < min_expected) {
      obs.back() += observed[i];
      exp.back() += expected[i];
    } else {
      obs.push_back(observed[i]);
      exp.push_back(expected[i]);
    }
  }
  // a trailing underfilled bin merges leftward
  while (exp.size() > 1 && exp.back() < min_expected) {
    exp[exp.size() - 2] += exp.back();
    obs[obs.size() - 2] += obs.back();
    exp.pop_back();
    obs.pop_back();
  }
  ChiSquare r;
  r.bins = static_cast<int>(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (!(exp[i] > 0.0)) throw std::invalid_argument("chi_square: zero expected");
    double d = obs[i] - exp[i];
    r.statistic += d * d / exp[i];
  }
  return r;
}

}  // namespace ringburst
