#include "ringburst/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

#include "ringburst/analytics.hpp"
#include "ringburst/cascade.hpp"
#include "ringburst/graph.hpp"
#include "ringburst/montecarlo.hpp"
#include "ringburst/phases.hpp"
#include "ringburst/rng.hpp"
#include "ringburst/stats.hpp"

namespace ringburst {
namespace {

// criterion i uses master seed 13000 + i, fixed before any run
constexpr std::uint64_t seed_for(int criterion) { return 13000 + criterion; }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

CheckResult leg(std::string name, bool pass, std::string detail) {
  return CheckResult{std::move(name), pass, std::move(detail)};
}

// --- 1: frontier engine vs naive fixed-point oracle --------------------------

std::vector<CheckResult> crit_oracle() {
  Rng rng(seed_for(1));
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t n;
    std::uint32_t dim;
    if (rng.below(10) == 0) {
      const std::uint32_t side = 4 + static_cast<std::uint32_t>(rng.below(11));
      n = side * side;
      dim = 2;
    } else {
      n = 10 + static_cast<std::uint32_t>(rng.below(191));
      dim = 1;
    }
    const double p_choices[] = {0.0, 0.005, 0.02, 0.05, 0.1, 0.2, 0.3};
    double p = p_choices[rng.below(7)];
    if (rng.below(4) == 0) p = rng.unit() * 0.4;
    CascadeConfig cc;
    cc.r = (rng.below(7) == 0) ? 3 : 2;
    cc.use_lattice = rng.below(10) != 0;
    const HybridGraph g = HybridGraph::generate(n, p, dim, rng.next_u64());
    const std::uint64_t k = 1 + rng.below(5);
    std::vector<VertexId> seeds;
    for (std::uint64_t s = 0; s < k; ++s)
      seeds.push_back(1 + static_cast<VertexId>(rng.below(n)));
    const CascadeResult fast = run_bootstrap(g, seeds, cc);
    const CascadeResult slow = run_bootstrap_naive(g, seeds, cc);
    if (fast.final_active != slow.final_active || fast.round != slow.round)
      ++mismatches;
  }
  return {leg("oracle equivalence, 1000 instances", mismatches == 0,
              "mismatches=" + std::to_string(mismatches))};
}

// --- 2: phase decomposition reproduces the cascade closure -------------------

std::vector<CheckResult> crit_phases_equiv() {
  Rng rng(seed_for(2));
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t n = 10 + static_cast<std::uint32_t>(rng.below(491));
    const double p_choices[] = {0.0, 0.002, 0.01, 0.03, 0.08, 0.15};
    double p = p_choices[rng.below(6)];
    if (rng.below(5) == 0) p = rng.unit() * 0.2;
    const bool lattice = rng.below(10) < 7;
    const HybridGraph g = HybridGraph::generate(n, p, 1, rng.next_u64());
    const std::uint64_t k = 2 + rng.below(4);
    std::vector<VertexId> seeds;
    while (seeds.size() < k) {
      const VertexId v = 1 + static_cast<VertexId>(rng.below(n));
      if (std::find(seeds.begin(), seeds.end(), v) == seeds.end()) seeds.push_back(v);
    }
    PhaseOptions opts;
    opts.use_lattice = lattice;
    opts.collect_intervals = false;
    const PhaseTrace tr = run_phases(g, seeds, rng.next_u64(), opts);
    CascadeConfig cc;
    cc.use_lattice = lattice;
    const CascadeResult cr = run_bootstrap(g, seeds, cc);
    if (tr.final_active != cr.final_active) ++mismatches;
  }
  return {leg("phase decomposition vs cascade closure, 1000 instances", mismatches == 0,
              "mismatches=" + std::to_string(mismatches))};
}

// --- 3: subcritical plateau --------------------------------------------------

std::vector<CheckResult> crit_subcritical() {
  ExperimentConfig cfg;
  cfg.n = 200000;
  cfg.gamma = 0.7;
  cfg.initial = {InitialMode::AlphaOfAc, 0.5};
  cfg.replicates = 200;
  cfg.master_seed = seed_for(3);
  const ExperimentReport rep = run_experiment(cfg);
  const SubcriticalResult sub = subcritical_check(rep, 0.5);
  std::vector<CheckResult> out;
  out.push_back(leg("subcritical mean final size over t_c",
                    sub.abs_error <= 0.1,
                    "mean=" + fmt(sub.mean_ratio) + " target=" + fmt(sub.phi_alpha) +
                        " |err|=" + fmt(sub.abs_error) + " (band 0.1)"));
  out.push_back(leg("subcritical almost-percolation rate",
                    rep.agg.freq_almost <= 0.05,
                    "freq=" + fmt(rep.agg.freq_almost) + " (bar 0.05)"));
  return out;
}

// --- 4: supercritical complete percolation -----------------------------------

std::vector<CheckResult> crit_supercritical() {
  ExperimentConfig cfg;
  cfg.n = 200000;
  cfg.gamma = 0.7;
  cfg.initial = {InitialMode::AlphaOfAc, 1.5};
  cfg.replicates = 100;
  cfg.master_seed = seed_for(4);
  const ExperimentReport rep = run_experiment(cfg);
  std::uint64_t full = 0;
  for (const auto& row : rep.rows) full += row.percolated_fully;
  return {leg("supercritical complete percolation", full >= 95,
              "full=" + std::to_string(full) + "/100 (bar 95)")};
}

// --- 5: critical window on the pure overlay ----------------------------------

std::vector<CheckResult> crit_window() {
  const std::uint32_t n = 1000000;
  const double p = std::pow(static_cast<double>(n), -0.6);
  const auto pts = critical_window_scan(n, p, {-6.0, 0.0, 6.0}, 200, seed_for(5),
                                        /*use_lattice=*/false);
  std::vector<CheckResult> out;
  out.push_back(leg("window leg y=-6", pts[0].frequency <= 0.05,
                    "freq=" + fmt(pts[0].frequency) + " (bar <= 0.05), A0=" +
                        std::to_string(pts[0].A0)));
  out.push_back(leg("window leg y=0",
                    pts[1].frequency >= 0.3 && pts[1].frequency <= 0.7,
                    "freq=" + fmt(pts[1].frequency) + " (band [0.3, 0.7]), A0=" +
                        std::to_string(pts[1].A0)));
  out.push_back(leg("window leg y=+6", pts[2].frequency >= 0.95,
                    "freq=" + fmt(pts[2].frequency) + " (bar >= 0.95), A0=" +
                        std::to_string(pts[2].A0)));
  return out;
}

// --- 6: ring gain under a window deficit -------------------------------------

std::vector<CheckResult> crit_ring_gain() {
  ExperimentConfig cfg;
  cfg.n = 1000000;
  cfg.gamma = 0.9;
  cfg.initial = {InitialMode::WindowOffset,
                 -0.3 * std::pow(static_cast<double>(cfg.n), 0.3)};
  cfg.replicates = 50;
  cfg.master_seed = seed_for(6);
  std::vector<CheckResult> out;
  try {
    const PairedReport rep = ring_vs_no_ring(cfg);
    out.push_back(leg("ring-on almost-percolation", rep.freq_ring >= 0.8,
                      "freq=" + fmt(rep.freq_ring) + " (bar >= 0.8)"));
    out.push_back(leg("ring-off almost-percolation", rep.freq_noring <= 0.1,
                      "freq=" + fmt(rep.freq_noring) + " (bar <= 0.1)"));
    out.push_back(leg("coupling containment, 50 replicates", true, "held in 50/50"));
  } catch (const std::logic_error& e) {
    out.push_back(leg("coupling containment, 50 replicates", false, e.what()));
  }
  return out;
}

// --- 7: narrow window persists at large p ------------------------------------

std::vector<CheckResult> crit_window_persists() {
  ExperimentConfig cfg;
  cfg.n = 1000000;
  cfg.gamma = 0.55;
  cfg.initial = {InitialMode::WindowOffset, -8.0};
  cfg.replicates = 100;
  cfg.master_seed = seed_for(7);
  const ExperimentReport rep = run_experiment(cfg);
  const double t_c = 1.0 / (static_cast<double>(cfg.n) * rep.p * rep.p);
  std::uint64_t small = 0;
  for (const auto& row : rep.rows)
    small += (static_cast<double>(row.A_star) <= 1.2 * t_c);
  return {leg("final size stays within 1.2 t_c", small >= 95,
              "small=" + std::to_string(small) + "/100 (bar 95), 1.2 t_c=" +
                  fmt(1.2 * t_c))};
}

// --- 8: first-phase expansion scaling ----------------------------------------

std::vector<CheckResult> crit_d1_scaling() {
  const std::uint32_t n = 1000000;
  const double p1 = std::pow(static_cast<double>(n), -0.8);
  const D1ScalingResult r1 =
      d1_scaling_check(n, p1, 0.5, 300, stream_seed(seed_for(8), 0, Stream::Seeds));
  const double p2 = std::pow(static_cast<double>(n), -0.55);
  const D1ScalingResult r2 =
      d1_scaling_check(n, p2, 0.5, 300, stream_seed(seed_for(8), 1, Stream::Seeds));
  std::vector<CheckResult> out;
  out.push_back(leg("first-phase growth ratio", r1.ratio >= 0.7 && r1.ratio <= 1.3,
                    "ratio=" + fmt(r1.ratio) + " (band [0.7, 1.3])"));
  out.push_back(leg("vanishing expansion at large p", r2.mean_D1 <= 0.5,
                    "mean|D_1|=" + fmt(r2.mean_D1) + " (bar 0.5)"));
  return out;
}

// --- 9: exact pmf oracles ----------------------------------------------------

std::vector<CheckResult> crit_pmf() {
  double worst_interval = 0.0;
  for (std::uint64_t n = 4; n <= 12; ++n) {
    for (std::uint64_t k = 2; k <= n; ++k) {
      // enumerate all k-subsets of the cycle; L = gap after a uniform active
      std::vector<double> freq(n + 1, 0.0);
      double total = 0.0;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::uint64_t>(__builtin_popcount(mask)) != k) continue;
        for (std::uint64_t v = 0; v < n; ++v) {
          if (!((mask >> v) & 1u)) continue;
          std::uint64_t gap = 0;
          for (std::uint64_t s = 1; s <= n; ++s) {
            const std::uint64_t w = (v + s) % n;
            if ((mask >> w) & 1u) break;
            ++gap;
          }
          freq[gap] += 1.0;
          total += 1.0;
        }
      }
      for (std::uint64_t l = 0; l <= n; ++l)
        worst_interval = std::max(
            worst_interval, std::fabs(freq[l] / total - interval_pmf(l, n, k)));
    }
  }

  double worst_run = 0.0;
  const double p1s[] = {0.1, 0.3, 1.0 / 3.0, 0.7, 0.9};
  for (std::uint64_t l = 2; l <= 12; ++l) {
    for (double p1 : p1s) {
      // enumerate mark vectors; M = marked prefix plus marked suffix
      std::vector<double> pm(l + 1, 0.0);
      for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
        double w = 1.0;
        for (std::uint64_t b = 0; b < l; ++b)
          w *= ((mask >> b) & 1u) ? p1 : (1.0 - p1);
        std::uint64_t pre = 0;
        while (pre < l && ((mask >> pre) & 1u)) ++pre;
        std::uint64_t m = pre;
        if (pre < l) {
          std::uint64_t suf = 0;
          while (suf < l - pre && ((mask >> (l - 1 - suf)) & 1u)) ++suf;
          m = pre + suf;
        }
        pm[m] += w;
      }
      for (std::uint64_t m = 0; m + 2 <= l; ++m)
        worst_run = std::max(worst_run, std::fabs(pm[m] - mark_run_pmf(l, m, p1)));
      double tail = 0.0;
      for (std::uint64_t m = l - 1; m <= l; ++m) tail += pm[m];
      worst_run = std::max(worst_run, std::fabs(tail - mark_run_pmf(l, l - 1, p1)));
    }
  }

  std::vector<CheckResult> out;
  out.push_back(leg("interval pmf vs cycle enumeration", worst_interval <= 1e-12,
                    "max|diff|=" + fmt(worst_interval)));
  out.push_back(leg("mark-run pmf vs exhaustive enumeration", worst_run <= 1e-12,
                    "max|diff|=" + fmt(worst_run)));
  return out;
}

// --- 10: martingale defect and maximal-deviation bound -----------------------

std::vector<CheckResult> crit_martingale_only() {
  double worst = 0.0;
  const double ps[] = {0.0, 0.3, 0.5, 0.9};
  for (std::uint32_t k1 = 1; k1 <= 3; ++k1)
    for (std::uint32_t t0 = 1; t0 <= 4; ++t0)
      for (double p : ps) worst = std::max(worst, martingale_check(k1, p, t0));
  return {leg("martingale defect, exhaustive domains", worst <= 1e-12,
              "max defect=" + fmt(worst))};
}

std::vector<CheckResult> crit_doob_only() {
  const DoobResult d = doob_check(1000, 0.01, 20, 10000, seed_for(10));
  return {leg("maximal-deviation second-moment bound", d.pass,
              "empirical=" + fmt(d.empirical) + " bound=" + fmt(d.bound) +
                  " slack=" + fmt(d.slack))};
}

std::vector<CheckResult> crit_martingale() {
  std::vector<CheckResult> out = crit_martingale_only();
  for (auto& c : crit_doob_only()) out.push_back(std::move(c));
  return out;
}

// --- 11: normal prediction for the stopping time -----------------------------

std::vector<CheckResult> crit_normality() {
  const std::uint32_t n = 1000000;
  const double p = std::pow(static_cast<double>(n), -0.6);
  const AnalyticProfile prof = thresholds(n, p);
  const double raw = std::round(prof.a_c_star - 8.0 * std::sqrt(prof.a_c));
  const auto A0 = static_cast<std::uint64_t>(
      std::min(static_cast<double>(n), std::max(2.0, raw)));
  const NormalityResult r = normality_check(n, p, A0, 500, seed_for(11));
  std::vector<CheckResult> out;
  const double rel = std::fabs(r.sample_mean - r.predicted_mean) /
                     std::fabs(r.predicted_mean);
  out.push_back(leg("stopping-time mean", rel <= 0.1,
                    "sample=" + fmt(r.sample_mean) + " predicted=" +
                        fmt(r.predicted_mean) + " rel err=" + fmt(rel) +
                        " (band 0.1)"));
  const double vr = r.sample_var / r.predicted_var;
  out.push_back(leg("stopping-time variance ratio", vr >= 0.5 && vr <= 2.0,
                    "sample=" + fmt(r.sample_var) + " predicted=" +
                        fmt(r.predicted_var) + " ratio=" + fmt(vr) +
                        " (band [0.5, 2])"));
  out.push_back(leg("stopping-time KS distance", r.ks <= 0.15,
                    "ks=" + fmt(r.ks) + " (bar 0.15)"));
  return out;
}

// --- 12: geometric recursion bound -------------------------------------------

std::vector<CheckResult> crit_recursion() {
  Rng rng(seed_for(12));
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const double c = 0.001 + rng.unit() * 0.4;
    const double t1 = rng.unit() * (0.2499 / c);
    if (!(c * t1 < 0.25) || t1 <= 0.0) {
      --i;  // rejected draw outside the domain; redraw
      continue;
    }
    const RecursionBound rb = recursion_bound(c, t1, 50);
    double sum = 0.0;
    for (std::size_t k = 0; k < rb.t.size(); ++k) {
      sum += rb.t[k];
      if (rb.t[k] > std::pow(rb.alpha, static_cast<double>(k)) * t1) ++violations;
    }
    if (sum > rb.sum_bound) ++violations;
  }
  return {leg("geometric phase-size recursion bound, 100 draws", violations == 0,
              "violations=" + std::to_string(violations))};
}

// --- 13: byte-identical reports across worker counts -------------------------

std::vector<CheckResult> crit_determinism() {
  ExperimentConfig cfg;
  cfg.n = 20000;
  cfg.p = 0.001;
  cfg.initial = {InitialMode::AlphaOfAc, 0.8};
  cfg.replicates = 64;
  cfg.master_seed = seed_for(13);
  cfg.workers = 1;
  const std::string csv1 = run_experiment(cfg).to_csv();
  cfg.workers = 4;
  const std::string csv4 = run_experiment(cfg).to_csv();
  cfg.workers = 8;
  const std::string csv8 = run_experiment(cfg).to_csv();
  const bool same = (csv1 == csv4) && (csv1 == csv8);
  return {leg("byte-identical reports for 1/4/8 workers", same,
              same ? "identical" : "worker count changed the report bytes")};
}

using CriterionFn = std::vector<CheckResult> (*)();

struct Preset {
  const char* name;
  CriterionFn fn;
};

constexpr Preset kPresets[] = {
    {"oracle", &crit_oracle},
    {"phases-equiv", &crit_phases_equiv},
    {"subcritical", &crit_subcritical},
    {"supercritical", &crit_supercritical},
    {"window", nullptr},  // handled below: criteria 5 and 7
    {"ring-gain", &crit_ring_gain},
    {"d1-scaling", &crit_d1_scaling},
    {"pmf", &crit_pmf},
    {"martingale", &crit_martingale_only},
    {"doob", &crit_doob_only},
    {"normality", &crit_normality},
    {"recursion", &crit_recursion},
};

}  // namespace

std::vector<CheckResult> run_criterion(int index) {
  switch (index) {
    case 1: return crit_oracle();
    case 2: return crit_phases_equiv();
    case 3: return crit_subcritical();
    case 4: return crit_supercritical();
    case 5: return crit_window();
    case 6: return crit_ring_gain();
    case 7: return crit_window_persists();
    case 8: return crit_d1_scaling();
    case 9: return crit_pmf();
    case 10: return crit_martingale();
    case 11: return crit_normality();
    case 12: return crit_recursion();
    case 13: return crit_determinism();
    default: throw std::invalid_argument("criterion index must be in [1, 13]");
  }
}

const std::vector<std::string>& verify_preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& p : kPresets) v.emplace_back(p.name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_verify_preset(const std::string& preset) {
  if (preset == "window") {
    std::vector<CheckResult> out = crit_window();
    for (auto& c : crit_window_persists()) out.push_back(std::move(c));
    return out;
  }
  for (const auto& p : kPresets)
    if (preset == p.name && p.fn != nullptr) return p.fn();
  throw std::invalid_argument("unknown verify preset \"" + preset + "\"");
}

}  // namespace ringburst
