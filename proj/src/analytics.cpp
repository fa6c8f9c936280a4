#include "ringburst/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace ringburst {

namespace {

void check_np(double n, double p, const char* who) {
  if (!(n >= 3)) throw std::invalid_argument(std::string(who) + ": n must be >= 3");
  if (!(p > 0.0) || p >= 1.0)
    throw std::invalid_argument(std::string(who) + ": p must be in (0,1)");
}

double pi_tilde_x(double x) {
  // 1 - e^{-x}(1+x); the direct form cancels catastrophically for small x,
  // so switch to sum_{j>=2} (-1)^j (j-1)/j! x^j below the crossover
  if (x < 0.05) {
    double sum = 0.0, xj = x * x, fact = 2.0;  // x^j and j! running
    for (int j = 2; j <= 9; ++j) {
      double term = (j - 1) / fact * xj;
      sum += (j % 2 == 0) ? term : -term;
      xj *= x;
      fact *= (j + 1);
    }
    return sum;
  }
  return 1.0 - std::exp(-x) * (1.0 + x);
}

double log_binom(double n, double k) {  // log C(n,k)
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double pi_tilde(double t, double p) {
  if (t < 0.0) throw std::invalid_argument("pi_tilde: t must be >= 0");
  if (!(p >= 0.0) || p > 1.0)
    throw std::invalid_argument("pi_tilde: p must be in [0,1]");
  return pi_tilde_x(t * p);
}

double pi1(std::uint64_t t, double p) {
  if (!(p >= 0.0) || p > 1.0)
    throw std::invalid_argument("pi1: p must be in [0,1]");
  if (t < 2 || p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  const double td = static_cast<double>(t);
  const double x = (td - 1.0) * p;
  if (x < 1e-6) {
    // P(X>=2) ~= C(t,2) p^2 q^{t-2} + C(t,3) p^3 q^{t-3}, exact to ~x^2
    double lq = std::log1p(-p);
    double b2 = std::exp(log_binom(td, 2.0) + 2.0 * std::log(p) + (td - 2.0) * lq);
    double b3 = (t >= 3) ? std::exp(log_binom(td, 3.0) + 3.0 * std::log(p) +
                                    (td - 3.0) * lq)
                         : 0.0;
    return b2 + b3;
  }
  // 1 - q^{t-1}(1 + (t-1)p) evaluated through logs to dodge cancellation
  double l = (td - 1.0) * std::log1p(-p) + std::log1p(x);
  return -std::expm1(l);
}

double mark_prob(std::uint64_t k, double p) {
  if (k < 1) throw std::invalid_argument("mark_prob: k must be >= 1");
  if (!(p >= 0.0) || p > 1.0)
    throw std::invalid_argument("mark_prob: p must be in [0,1]");
  const double kd = static_cast<double>(k);
  return kd * p / (1.0 + (kd - 1.0) * p);
}

double pi_next(std::uint64_t t, double p, std::uint64_t cum_t) {
  if (t < 1) throw std::invalid_argument("pi_next: t must be >= 1");
  if (cum_t < 1) throw std::invalid_argument("pi_next: cum_t must be >= 1");
  if (!(p >= 0.0) || p > 1.0)
    throw std::invalid_argument("pi_next: p must be in [0,1]");
  if (p == 0.0) return 0.0;
  const double td = static_cast<double>(t);
  double carry = mark_prob(cum_t, p) *
                 std::exp((td - 1.0) * std::log1p(-p)) * p * td;
  return pi1(t, p) + carry;
}

double phi(double alpha) {
  if (!(alpha >= 0.0) || alpha > 1.0)
    throw std::domain_error("phi: alpha must be in [0,1]");
  // 1 - sqrt(1-alpha)
  return -std::expm1(0.5 * std::log1p(-alpha));
}

double interval_pmf(std::uint64_t l, std::uint64_t n, std::uint64_t k) {
  if (n < 3) throw std::invalid_argument("interval_pmf: n must be >= 3");
  if (k < 2 || k > n)
    throw std::invalid_argument("interval_pmf: k must be in [2, n]");
  if (l > n - k) return 0.0;
  const double nd = static_cast<double>(n), kd = static_cast<double>(k),
               ld = static_cast<double>(l);
  return std::exp(log_binom(nd - 2.0 - ld, kd - 2.0) -
                  log_binom(nd - 1.0, kd - 1.0));
}

double mark_run_pmf(std::uint64_t l, std::uint64_t m, double p1) {
  if (l < 1) throw std::invalid_argument("mark_run_pmf: l must be >= 1");
  if (m > l - 1)
    throw std::invalid_argument("mark_run_pmf: m must be in [0, l-1]");
  if (!(p1 >= 0.0) || p1 > 1.0)
    throw std::invalid_argument("mark_run_pmf: p1 must be in [0,1]");
  const double ld = static_cast<double>(l), md = static_cast<double>(m);
  if (m == l - 1)  // encodes P(M >= l-1): all marked, or one hole anywhere
    return std::pow(p1, ld) + ld * (1.0 - p1) * std::pow(p1, ld - 1.0);
  return (md + 1.0) * std::pow(p1, md) * (1.0 - p1) * (1.0 - p1);
}

double eta_prob(double p1) {
  if (!(p1 >= 0.0) || p1 > 1.0)
    throw std::invalid_argument("eta_prob: p1 must be in [0,1]");
  return 2.0 * p1 * (1.0 - p1) * (1.0 - p1);
}

DriftSpec drift(double n, double p, double T1) {
  check_np(n, p, "drift");
  if (!(T1 >= 0.0) || T1 > n)
    throw std::invalid_argument("drift: T1 must be in [0, n]");
  DriftSpec d;
  d.a = (n - T1) * p * p / 2.0;
  d.b = n * p * p * T1 - 1.0 - 3.0 * (T1 * p) * (T1 * p);
  d.c = 2.0 * p * T1 * T1;
  d.t_min = (d.a > 0.0) ? -d.b / (2.0 * d.a)
                        : std::numeric_limits<double>::quiet_NaN();
  double at = (d.a > 0.0) ? std::clamp(d.t_min, 0.0, n)
                          : (d.b >= 0.0 ? 0.0 : n);  // T1 == n: linear drift
  d.min_value = d.a * at * at + d.b * at + d.c;
  return d;
}

AsNormal t_star_asn(double n, double p, double A0) {
  check_np(n, p, "t_star_asn");
  AnalyticProfile prof = thresholds(n, p);
  if (!(A0 < prof.a_c_star))
    throw std::domain_error("t_star_asn: requires A0 < a_c_star");
  AsNormal r;
  r.mean = prof.t_c + p * prof.t_c * prof.t_c -
           std::sqrt(2.0 * prof.t_c * (prof.a_c_star - A0));
  r.variance = prof.t_c / (2.0 * (1.0 - A0 / prof.a_c_star));
  return r;
}

RecursionBound recursion_bound(double c, double t1, std::uint32_t k_max) {
  if (!(c >= 0.0)) throw std::invalid_argument("recursion_bound: c must be >= 0");
  if (!(t1 > 0.0)) throw std::invalid_argument("recursion_bound: t1 must be > 0");
  if (k_max < 1) throw std::invalid_argument("recursion_bound: k_max must be >= 1");
  RecursionBound r;
  if (!(c * t1 < 0.25))
    throw std::domain_error("recursion_bound: c*t1 >= 1/4, no contraction alpha");
  for (int i = 1; i <= 99; ++i) {
    double a = i / 100.0;
    if ((1.0 - a) * a > c * t1) {
      r.alpha = a;
      break;
    }
  }
  r.sum_bound = t1 / (1.0 - r.alpha);
  r.t.push_back(t1);
  double sum = t1;
  for (std::uint32_t k = 1; k < k_max; ++k) {
    double next = c * r.t.back() * sum;
    r.t.push_back(next);
    sum += next;
  }
  return r;
}

double complete_percolation_bound(double n, double p, double K_active) {
  if (!(n >= 1)) throw std::invalid_argument("complete_percolation_bound: n >= 1");
  if (!(p >= 0.0) || p > 1.0)
    throw std::invalid_argument("complete_percolation_bound: p in [0,1]");
  if (!(K_active >= 0.0) || K_active > n)
    throw std::invalid_argument("complete_percolation_bound: K in [0, n]");
  if (p == 1.0) return 0.0;
  return (n - K_active) * std::exp(K_active * std::log1p(-p));
}

AnalyticProfile thresholds(double n, double p) {
  check_np(n, p, "thresholds");
  AnalyticProfile prof;
  prof.n = n;
  prof.p = p;
  prof.t_c = 1.0 / (n * p * p);
  prof.a_c = prof.t_c / 2.0;
  prof.b_c = p * n * n * std::exp(-p * n);
  prof.q_c_2d = std::numbers::pi * std::numbers::pi / (18.0 * std::log(n));

  const double hi = 3.0 * prof.t_c;
  auto h = [&](double t) {
    double pt = pi_tilde_x(t * p);
    return (n * pt - t) / (1.0 - pt);
  };

  // coarse grid, then golden-section refinement around the best point
  const int grid = 10000;
  int best = 0;
  double best_val = h(0.0);
  for (int i = 1; i <= grid; ++i) {
    double v = h(hi * i / grid);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo_t = hi * std::max(0, best - 1) / grid;
  double hi_t = hi * std::min(grid, best + 1) / grid;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = 1e-10 * hi;
  double a = lo_t, b = hi_t;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = h(x1), f2 = h(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a); f1 = h(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a); f2 = h(x2);
    }
  }
  prof.t_c_star = 0.5 * (a + b);
  prof.a_c_star = -h(prof.t_c_star);
  prof.minimizer_on_boundary =
      (best == 0 || best == grid || prof.t_c_star <= tol ||
       prof.t_c_star >= hi - tol);
  return prof;
}

std::string AnalyticProfile::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["p"] = p;
  j["t_c"] = t_c;
  j["a_c"] = a_c;
  j["a_c_star"] = a_c_star;
  j["t_c_star"] = t_c_star;
  j["b_c"] = b_c;
  j["q_c_2d"] = q_c_2d;
  j["minimizer_on_boundary"] = minimizer_on_boundary;
  return j.dump(2);
}

}  // namespace ringburst
