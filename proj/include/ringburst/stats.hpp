#pragma once

// Small statistics helpers shared by the Monte Carlo checks.

#include <cstdint>
#include <vector>

namespace ringburst {

struct WilsonInterval {
  double estimate = 0;
  double lo = 0;
  double hi = 0;
};

// Wilson score interval for a binomial proportion at 95% confidence
WilsonInterval wilson_ci(std::uint64_t successes, std::uint64_t trials);

double normal_cdf(double x);  // standard normal Phi

struct MeanVar {
  double mean = 0;
  double variance = 0;  // sample variance (n-1 denominator), 0 if count < 2
  std::uint64_t count = 0;
};

MeanVar mean_var(const std::vector<double>& xs);

// one-sample Kolmogorov-Smirnov statistic vs Normal(mu, sigma^2)
double ks_statistic_normal(std::vector<double> xs, double mu, double sigma);

// two-sample Kolmogorov-Smirnov statistic
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Pearson chi-square statistic; bins with expected < min_expected are pooled
// into their left neighbour. Returns the statistic and the pooled bin count.
struct ChiSquare {
  double statistic = 0;
  int bins = 0;
};

ChiSquare chi_square(const std::vector<double>& observed,
                     const std::vector<double>& expected,
                     double min_expected = 5.0);

}  // namespace ringburst
