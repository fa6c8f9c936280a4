#pragma once

// Closed-form quantities for the activation process on the hybrid graph:
// critical thresholds, activation probabilities, interval and mark-run laws,
// the second-phase drift polynomial, and limit predictions used by the
// Monte Carlo checks.

#include <cstdint>
#include <string>
#include <vector>

namespace ringburst {

struct AnalyticProfile {
  double n = 0;
  double p = 0;
  double t_c = 0;       // 1/(n p^2)
  double a_c = 0;       // t_c / 2
  double a_c_star = 0;  // -min_{0<=t<=3 t_c} (n pi~(t) - t)/(1 - pi~(t))
  double t_c_star = 0;  // the minimizer
  double b_c = 0;       // p n^2 e^{-pn}
  double q_c_2d = 0;    // pi^2 / (18 log n)
  bool minimizer_on_boundary = false;  // grid edge hit: out of regime

  std::string to_json() const;
};

AnalyticProfile thresholds(double n, double p);

// P(Po(tp) >= 2) = 1 - e^{-tp}(1 + tp), series fallback for small tp
double pi_tilde(double t, double p);

// P(Bin(t,p) >= 2) = 1 - (1-p)^t - tp(1-p)^{t-1} for integer t
double pi1(std::uint64_t t, double p);

// P(a fresh vertex carries a mark after k used vertices, given < 2 marks):
// k p / (1 + (k-1) p)
double mark_prob(std::uint64_t k, double p);

// later-phase activation probability: pi1(t) plus the one-prior-mark term
// [cumT p / (1 + (cumT-1) p)] (1-p)^{t-1} p t
double pi_next(std::uint64_t t, double p, std::uint64_t cum_t);

// subcritical final-size scaling: phi(alpha) = 1 - sqrt(1 - alpha), [0,1]
double phi(double alpha);

// stationary inactive-interval length law on the ring with k uniform active
// vertices: P(L = l) = C(n-2-l, k-2) / C(n-1, k-1), l in [0, n-k]
double interval_pmf(std::uint64_t l, std::uint64_t n, std::uint64_t k);

// law of the absorbed mark count M in an interval of length l with iid
// endpoint-connected marks of probability p1; m = l-1 encodes P(M >= l-1)
double mark_run_pmf(std::uint64_t l, std::uint64_t m, double p1);

// P(a length-2 interval yields exactly one new boundary pair) = 2 p1 (1-p1)^2
double eta_prob(double p1);

struct DriftSpec {
  double a = 0, b = 0, c = 0;  // f(t) = a t^2 + b t + c
  double t_min = 0;            // unconstrained vertex (may be negative)
  double min_value = 0;        // min over t in [0, n]
};

// second-phase drift f_{T1}(t) = (n-T1)(p^2/2) t^2
//                              + (n p^2 T1 - 1 - 3 (T1 p)^2) t + 2 p T1^2
DriftSpec drift(double n, double p, double T1);

struct AsNormal {
  double mean = 0;      // t_c + p t_c^2 - sqrt(2 t_c (a_c* - A0))
  double variance = 0;  // t_c / (2 (1 - A0/a_c*))
};

AsNormal t_star_asn(double n, double p, double A0);

struct RecursionBound {
  std::vector<double> t;  // t_1..t_K, t_{k+1} = c t_k sum_{l<=k} t_l
  double alpha = 0;       // smallest grid alpha with (1-alpha) alpha > c t1
  double sum_bound = 0;   // t1 / (1 - alpha)
};

RecursionBound recursion_bound(double c, double t1, std::uint32_t k_max);

// expected stragglers (n - K)(1-p)^K when K vertices are already active
double complete_percolation_bound(double n, double p, double K_active);

}  // namespace ringburst
