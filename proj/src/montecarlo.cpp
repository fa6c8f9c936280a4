#include "ringburst/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "ringburst/cascade.hpp"
#include "ringburst/rng.hpp"

namespace ringburst {

namespace detail {
void compute_aggregates(ExperimentReport& rep);  // defined in report.cpp
}

namespace {

// above this expected edge count, ring runs sample the overlay lazily instead
// of materialising the graph
constexpr double kImplicitEdgeThreshold = 3.3e7;

double expected_random_edges(std::uint32_t n, double p) {
  return p * static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
}

bool use_implicit_path(const ExperimentConfig& cfg, double p) {
  if (cfg.force_materialized || cfg.dim != 1 || cfg.r != 2) return false;
  return expected_random_edges(cfg.n, p) > kImplicitEdgeThreshold;
}

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument("config error: field \"" + field + "\" " + why);
}

std::vector<VertexId> sample_uniform(std::uint64_t k, std::uint32_t n, Rng& rng) {
  // Floyd's algorithm: k distinct uniform draws from {1..n}
  std::unordered_set<VertexId> seen;
  seen.reserve(static_cast<std::size_t>(k) * 2);
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::uint64_t j = n - k; j < n; ++j) {
    const VertexId t = static_cast<VertexId>(rng.below(j + 1)) + 1;
    if (seen.insert(t).second) {
      out.push_back(t);
    } else {
      seen.insert(static_cast<VertexId>(j + 1));
      out.push_back(static_cast<VertexId>(j + 1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t resolve_workers(const ExperimentConfig& cfg, double p, bool implicit) {
  std::uint32_t w = cfg.workers;  // an explicit config value wins
  if (w == 0) {
    if (const char* env = std::getenv("RINGBURST_WORKERS")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end && *end == '\0' && v >= 1 && v <= 1024) w = static_cast<std::uint32_t>(v);
    }
  }
  if (w == 0) {
    w = std::thread::hardware_concurrency();
    if (w == 0) w = 1;
    if (!implicit) {
      // keep the resident materialised graphs within a few GB
      const double bytes =
          8.0 * (cfg.n + 1.0) + 10.0 * expected_random_edges(cfg.n, p) + 24.0 * cfg.n;
      const double cap = std::max(1.0, 3.5e9 / bytes);
      w = std::min<std::uint32_t>(w, static_cast<std::uint32_t>(cap));
    }
  }
  w = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(w, std::max<std::uint64_t>(cfg.replicates, 1)));
  return std::max<std::uint32_t>(w, 1);
}

ReplicateRow run_one(const ExperimentConfig& cfg, double p, double b_star,
                     std::uint64_t init_count, std::uint64_t i, bool implicit) {
  ReplicateRow row;
  row.replicate = i;
  std::vector<VertexId> init;
  if (!cfg.forced_seeds.empty()) {
    init = cfg.forced_seeds;
    std::sort(init.begin(), init.end());
  } else {
    Rng seed_rng(stream_seed(cfg.master_seed, i, Stream::Seeds));
    init = sample_uniform(init_count, cfg.n, seed_rng);
  }
  row.A0 = init.size();
  const std::uint64_t gseed = stream_seed(cfg.master_seed, i, Stream::Graph);
  const std::uint64_t oseed = stream_seed(cfg.master_seed, i, Stream::PhaseOrder);

  if (cfg.dim == 1 && cfg.r == 2) {
    PhaseOptions opts;
    opts.use_lattice = cfg.use_lattice;
    opts.record_trajectory = false;
    opts.collect_intervals = false;
    opts.collect_final_active = false;
    PhaseTrace tr;
    if (implicit) {
      tr = run_phases_implicit(cfg.n, p, init, oseed, gseed, opts);
    } else {
      HybridGraph g = HybridGraph::generate(cfg.n, p, 1, gseed);
      tr = run_phases(g, init, oseed, opts);
    }
    row.A_star = tr.A_star;
    row.K = tr.K;
    row.T_total = tr.T_total;
    row.T_k.reserve(tr.phases.size());
    for (const auto& ph : tr.phases) row.T_k.push_back(ph.T_k);
    row.T1 = tr.phases.front().T_k;
    row.D1_size = tr.phases.front().D_k.size();
  } else {
    // torus or r != 2: plain cascade, no phase decomposition (K = 0)
    HybridGraph g = HybridGraph::generate(cfg.n, p, cfg.dim, gseed);
    CascadeConfig cc;
    cc.r = cfg.r;
    cc.use_lattice = cfg.use_lattice;
    const CascadeResult cr = run_bootstrap(g, init, cc);
    row.A_star = cr.final_active.size();
  }
  row.percolated_almost =
      static_cast<double>(row.A_star) >= static_cast<double>(cfg.n) - b_star;
  row.percolated_fully = (row.A_star == cfg.n);
  return row;
}

}  // namespace

double ExperimentConfig::resolved_p() const {
  if (p >= 0.0) return p;
  if (gamma > 0.0) return std::pow(static_cast<double>(n), -gamma);
  return -1.0;
}

double ExperimentConfig::resolved_b_star() const {
  if (almost_threshold >= 0.0) return almost_threshold;
  return std::pow(static_cast<double>(n), 0.9);
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.n < 3) bad_field("n", "must be at least 3");
  if (cfg.dim != 1 && cfg.dim != 2) bad_field("dim", "must be 1 or 2");
  if (cfg.dim == 2) {
    const auto s = static_cast<std::uint32_t>(std::llround(std::sqrt(double(cfg.n))));
    if (s * s != cfg.n) bad_field("n", "must be a perfect square when dim is 2");
  }
  if (cfg.p >= 0.0 && cfg.gamma > 0.0) bad_field("p", "and \"gamma\" are both set; give one");
  const double p = cfg.resolved_p();
  if (p < 0.0) bad_field("p", "or \"gamma\" is required");
  if (!(p >= 0.0 && p < 1.0)) bad_field("p", "must resolve into [0, 1)");
  if (cfg.replicates == 0) bad_field("replicates", "must be at least 1 (empty experiment)");
  if (cfg.r < 2 || cfg.r > 64) bad_field("r", "must be in [2, 64]");
  if (!std::isfinite(cfg.initial.value)) bad_field("initial.value", "must be finite");
  if (cfg.initial.mode != InitialMode::Count && p == 0.0 && cfg.forced_seeds.empty())
    bad_field("initial.mode", "needs p > 0 (critical scales are undefined at p = 0)");
  if (!cfg.forced_seeds.empty()) {
    if (cfg.forced_seeds.size() < 2) bad_field("forced_seeds", "needs at least 2 vertices");
    std::vector<VertexId> s = cfg.forced_seeds;
    std::sort(s.begin(), s.end());
    if (s.front() < 1 || s.back() > cfg.n)
      bad_field("forced_seeds", "has a vertex outside [1, n]");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      bad_field("forced_seeds", "has duplicates");
  }
}

std::uint64_t resolve_initial_count(const ExperimentConfig& cfg) {
  if (!cfg.forced_seeds.empty()) return cfg.forced_seeds.size();
  const double p = cfg.resolved_p();
  double raw = 2.0;
  switch (cfg.initial.mode) {
    case InitialMode::Count:
      raw = cfg.initial.value;
      break;
    case InitialMode::AlphaOfAc: {
      const AnalyticProfile prof = thresholds(cfg.n, p);
      raw = cfg.initial.value * prof.a_c;
      break;
    }
    case InitialMode::WindowOffset: {
      const AnalyticProfile prof = thresholds(cfg.n, p);
      raw = prof.a_c_star + cfg.initial.value * std::sqrt(prof.a_c);
      break;
    }
  }
  const double clamped =
      std::min(static_cast<double>(cfg.n), std::max(2.0, std::round(raw)));
  return static_cast<std::uint64_t>(clamped);
}

std::vector<VertexId> initial_set_for_replicate(const ExperimentConfig& cfg,
                                                std::uint64_t replicate) {
  validate_config(cfg);
  if (!cfg.forced_seeds.empty()) {
    std::vector<VertexId> s = cfg.forced_seeds;
    std::sort(s.begin(), s.end());
    return s;
  }
  const std::uint64_t k = resolve_initial_count(cfg);
  Rng rng(stream_seed(cfg.master_seed, replicate, Stream::Seeds));
  return sample_uniform(k, cfg.n, rng);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const double p = cfg.resolved_p();
  const double b_star = cfg.resolved_b_star();
  const std::uint64_t init_count = resolve_initial_count(cfg);
  const bool implicit = use_implicit_path(cfg, p);

  ExperimentReport rep;
  rep.cfg = cfg;
  rep.p = p;
  rep.b_star = b_star;
  rep.rows.resize(cfg.replicates);

  const std::uint32_t workers = resolve_workers(cfg, p, implicit);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < cfg.replicates; ++i)
      rep.rows[i] = run_one(cfg, p, b_star, init_count, i, implicit);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto work = [&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= cfg.replicates) break;
        try {
          rep.rows[i] = run_one(cfg, p, b_star, init_count, i, implicit);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mutex);
          if (!err) err = std::current_exception();
          break;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  detail::compute_aggregates(rep);
  return rep;
}

PhaseTrace replay_replicate(const ExperimentConfig& cfg, std::uint64_t replicate,
                            bool full_trajectory) {
  validate_config(cfg);
  if (replicate >= cfg.replicates)
    bad_field("replicate", "index is out of range for the configured replicate count");
  if (cfg.dim != 1 || cfg.r != 2)
    bad_field("dim", "phase traces need dim = 1 and r = 2");
  const double p = cfg.resolved_p();
  std::vector<VertexId> init = initial_set_for_replicate(cfg, replicate);
  const std::uint64_t gseed = stream_seed(cfg.master_seed, replicate, Stream::Graph);
  const std::uint64_t oseed = stream_seed(cfg.master_seed, replicate, Stream::PhaseOrder);
  PhaseOptions opts;
  opts.use_lattice = cfg.use_lattice;
  opts.record_trajectory = full_trajectory;
  opts.collect_intervals = true;
  opts.collect_final_active = false;
  if (use_implicit_path(cfg, p))
    return run_phases_implicit(cfg.n, p, init, oseed, gseed, opts);
  HybridGraph g = HybridGraph::generate(cfg.n, p, 1, gseed);
  return run_phases(g, init, oseed, opts);
}

PercolationEstimate estimate_percolation_prob(const ExperimentReport& report,
                                              double b_star) {
  if (report.rows.empty()) throw std::invalid_argument("empty experiment report");
  std::uint64_t hits = 0;
  for (const auto& row : report.rows)
    if (static_cast<double>(row.A_star) > static_cast<double>(report.cfg.n) - b_star)
      ++hits;
  PercolationEstimate est;
  est.ci = wilson_ci(hits, report.rows.size());
  est.frequency = est.ci.estimate;
  return est;
}

SubcriticalResult subcritical_check(const ExperimentReport& report, double alpha) {
  if (report.rows.empty()) throw std::invalid_argument("empty experiment report");
  if (!(alpha < 1.0)) throw std::invalid_argument("subcritical check needs alpha < 1");
  if (!(report.p > 0.0)) throw std::invalid_argument("subcritical check needs p > 0");
  const double t_c = 1.0 / (static_cast<double>(report.cfg.n) * report.p * report.p);
  std::vector<double> ratio;
  ratio.reserve(report.rows.size());
  for (const auto& row : report.rows)
    ratio.push_back(static_cast<double>(row.A_star) / t_c);
  const MeanVar mv = mean_var(ratio);
  SubcriticalResult res;
  res.mean_ratio = mv.mean;
  res.var_ratio = mv.variance;
  res.phi_alpha = phi(alpha);
  res.abs_error = std::fabs(res.mean_ratio - res.phi_alpha);
  return res;
}

std::vector<WindowPoint> critical_window_scan(std::uint32_t n, double p,
                                              const std::vector<double>& y_grid,
                                              std::uint64_t replicates,
                                              std::uint64_t master_seed,
                                              bool use_lattice, double b_star) {
  std::vector<WindowPoint> out;
  out.reserve(y_grid.size());
  for (std::size_t j = 0; j < y_grid.size(); ++j) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.p = p;
    cfg.dim = 1;
    cfg.initial = {InitialMode::WindowOffset, y_grid[j]};
    cfg.replicates = replicates;
    cfg.master_seed = stream_seed(master_seed, j, Stream::Seeds);
    cfg.use_lattice = use_lattice;
    cfg.almost_threshold = b_star;
    const ExperimentReport rep = run_experiment(cfg);
    WindowPoint wp;
    wp.y = y_grid[j];
    wp.A0 = resolve_initial_count(cfg);
    wp.frequency = rep.agg.freq_almost;
    wp.ci = rep.agg.ci_almost;
    wp.phi_y = normal_cdf(y_grid[j]);
    out.push_back(wp);
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b)
      if (out[a].y < out[b].y && out[a].ci.lo > out[b].ci.hi) {
        out[a].isotonic_violation = true;
        out[b].isotonic_violation = true;
      }
  return out;
}

PairedReport ring_vs_no_ring(const ExperimentConfig& cfg) {
  validate_config(cfg);
  if (cfg.dim != 1 || cfg.r != 2)
    throw std::invalid_argument("ring comparison needs dim = 1 and r = 2");
  const double p = cfg.resolved_p();
  const double b_star = cfg.resolved_b_star();
  const std::uint64_t init_count = resolve_initial_count(cfg);

  PairedReport out;
  out.rows.reserve(cfg.replicates);
  std::uint64_t hits_ring = 0, hits_noring = 0;
  for (std::uint64_t i = 0; i < cfg.replicates; ++i) {
    std::vector<VertexId> init;
    if (!cfg.forced_seeds.empty()) {
      init = cfg.forced_seeds;
      std::sort(init.begin(), init.end());
    } else {
      Rng seed_rng(stream_seed(cfg.master_seed, i, Stream::Seeds));
      init = sample_uniform(init_count, cfg.n, seed_rng);
    }
    const std::uint64_t gseed = stream_seed(cfg.master_seed, i, Stream::Graph);
    const std::uint64_t oseed = stream_seed(cfg.master_seed, i, Stream::PhaseOrder);
    // one shared edge set per replicate, so the two runs are coupled
    HybridGraph g = HybridGraph::generate(cfg.n, p, 1, gseed);
    PhaseOptions opts;
    opts.collect_intervals = false;
    opts.collect_final_active = false;
    opts.use_lattice = true;
    const PhaseTrace ring = run_phases(g, init, oseed, opts);
    opts.use_lattice = false;
    const PhaseTrace noring = run_phases(g, init, oseed, opts);
    if (noring.A_star > ring.A_star)
      throw std::logic_error("coupling violated: lattice-off run exceeded lattice-on run");
    PairedRow row;
    row.A_star_ring = ring.A_star;
    row.A_star_noring = noring.A_star;
    row.almost_ring =
        static_cast<double>(ring.A_star) >= static_cast<double>(cfg.n) - b_star;
    row.almost_noring =
        static_cast<double>(noring.A_star) >= static_cast<double>(cfg.n) - b_star;
    hits_ring += row.almost_ring;
    hits_noring += row.almost_noring;
    out.rows.push_back(row);
  }
  out.ci_ring = wilson_ci(hits_ring, cfg.replicates);
  out.ci_noring = wilson_ci(hits_noring, cfg.replicates);
  out.freq_ring = out.ci_ring.estimate;
  out.freq_noring = out.ci_noring.estimate;
  return out;
}

D1ScalingResult d1_scaling_check(std::uint32_t n, double p, double alpha,
                                 std::uint64_t replicates, std::uint64_t master_seed) {
  if (replicates == 0) throw std::invalid_argument("d1 scaling needs replicates >= 1");
  const AnalyticProfile prof = thresholds(n, p);
  const double raw = std::round(alpha * prof.a_c);
  const auto A0 = static_cast<std::uint64_t>(
      std::min(static_cast<double>(n), std::max(2.0, raw)));
  double sum_d1 = 0.0, sum_t1_sq = 0.0;
  for (std::uint64_t i = 0; i < replicates; ++i) {
    Rng seed_rng(stream_seed(master_seed, i, Stream::Seeds));
    const std::vector<VertexId> init = sample_uniform(A0, n, seed_rng);
    PhaseOptions opts;
    opts.collect_intervals = false;
    opts.collect_final_active = false;
    PhaseEngine eng(n, p, stream_seed(master_seed, i, Stream::Graph), opts);
    Rng order(stream_seed(master_seed, i, Stream::PhaseOrder));
    const ExplorationResult ex = eng.exploration_phase(init, order);
    const ExpansionResult dk = eng.expansion_phase();
    sum_d1 += static_cast<double>(dk.D_k.size());
    sum_t1_sq += static_cast<double>(ex.T_k) * static_cast<double>(ex.T_k);
  }
  D1ScalingResult res;
  res.mean_D1 = sum_d1 / static_cast<double>(replicates);
  res.mean_T1_sq = sum_t1_sq / static_cast<double>(replicates);
  res.ratio = res.mean_D1 / (2.0 * p * res.mean_T1_sq);
  return res;
}

double martingale_check(std::uint32_t K1, double p, std::uint32_t t0) {
  if (K1 < 1 || K1 > 3 || t0 < 1 || t0 > 4)
    throw std::invalid_argument(
        "martingale enumeration domain too large (need K1 <= 3, t0 <= 4)");
  if (!(p >= 0.0 && p < 1.0))
    throw std::invalid_argument("martingale check needs p in [0, 1)");

  const std::uint32_t bits = K1 * t0;
  const std::uint32_t total = 1u << bits;
  // extended precision throughout: X values carry a 1/(1 - pi) amplification,
  // and the conditional means cancel to zero only in exact arithmetic
  const long double pl = static_cast<long double>(p);
  std::vector<long double> pi(t0 + 1, 0.0L);
  for (std::uint32_t t = 1; t <= t0; ++t)
    pi[t] = 1.0L - std::pow(1.0L - pl, static_cast<long double>(t)) -
            static_cast<long double>(t) * pl *
                std::pow(1.0L - pl, static_cast<long double>(t) - 1.0L);

  // outcome bit (i, s): vertex i receives a mark at step s+1
  auto bit = [&](std::uint32_t outcome, std::uint32_t i, std::uint32_t s) {
    return (outcome >> (i * t0 + s)) & 1u;
  };
  auto x_value = [&](std::uint32_t S, std::uint32_t t) {
    return (static_cast<long double>(S) - K1 * pi[t]) / (1.0L - pi[t]);
  };

  long double max_defect = 0.0L;
  for (std::uint32_t t = 0; t < t0; ++t) {
    // condition on the per-vertex activation-indicator paths through step t
    struct Group {
      long double mass = 0.0L;
      long double weighted_next = 0.0L;
      long double x_now = 0.0L;
    };
    std::map<std::uint64_t, Group> groups;
    for (std::uint32_t outcome = 0; outcome < total; ++outcome) {
      long double w = 1.0L;
      for (std::uint32_t b = 0; b < bits; ++b)
        w *= ((outcome >> b) & 1u) ? pl : (1.0L - pl);
      if (w == 0.0L) continue;
      std::uint64_t key = 0;
      std::uint32_t S_t = 0, S_next = 0;
      for (std::uint32_t i = 0; i < K1; ++i) {
        std::uint32_t m = 0;
        for (std::uint32_t s = 0; s < t0; ++s) {
          m += bit(outcome, i, s);
          const std::uint32_t ind = (m >= 2) ? 1 : 0;
          if (s < t) key = (key << 1) | ind;
          if (s + 1 == t) S_t += ind;
          if (s + 1 == t + 1) S_next += ind;
        }
      }
      Group& g = groups[key];
      g.mass += w;
      g.weighted_next += w * x_value(S_next, t + 1);
      g.x_now = x_value(S_t, t);
    }
    for (const auto& [key, g] : groups) {
      (void)key;
      max_defect = std::max(max_defect,
                            std::fabs(g.weighted_next / g.mass - g.x_now));
    }
  }
  return static_cast<double>(max_defect);
}

DoobResult doob_check(std::uint32_t K, double p, std::uint32_t t0,
                      std::uint64_t replicates, std::uint64_t master_seed) {
  if (replicates < 1000)
    throw std::invalid_argument("doob check needs at least 1000 replicates");
  if (K < 1) throw std::invalid_argument("doob check needs K >= 1");
  if (t0 < 1) throw std::invalid_argument("doob check needs t0 >= 1");
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("doob check needs p in [0, 1)");
  if (p > 0.0 && -static_cast<double>(K) * std::log1p(-p) > 600.0)
    throw std::invalid_argument("doob check: binomial inversion would underflow");

  double sum_sq = 0.0;
  for (std::uint64_t rep = 0; rep < replicates; ++rep) {
    Rng rng(stream_seed(master_seed, rep, Stream::Seeds));
    std::uint64_t c0 = K, c1 = 0, S = 0;
    double sup = 0.0;
    for (std::uint32_t t = 1; t <= t0; ++t) {
      const std::uint64_t gain = binomial_inv(rng, c0, p);      // 0 -> 1 mark
      const std::uint64_t promote = binomial_inv(rng, c1, p);   // 1 -> 2 marks
      c0 -= gain;
      c1 += gain - promote;
      S += promote;
      const double dev = std::fabs(static_cast<double>(S) - K * pi1(t, p));
      sup = std::max(sup, dev);
    }
    sum_sq += sup * sup;
  }
  DoobResult res;
  res.empirical = sum_sq / static_cast<double>(replicates);
  const double pit = pi1(t0, p);
  res.bound = 4.0 * static_cast<double>(K) * pit / (1.0 - pit);
  res.slack = res.bound * (1.0 + 3.0 / std::sqrt(static_cast<double>(replicates)));
  res.pass = res.empirical <= res.slack;
  return res;
}

NormalityResult normality_check(std::uint32_t n, double p, std::uint64_t A0,
                                std::uint64_t replicates, std::uint64_t master_seed) {
  if (replicates < 2) throw std::invalid_argument("normality check needs replicates >= 2");
  if (A0 < 2 || A0 > n) throw std::invalid_argument("normality check needs 2 <= A0 <= n");
  const AsNormal pred = t_star_asn(n, p, static_cast<double>(A0));
  std::vector<double> xs;
  xs.reserve(replicates);
  PhaseOptions opts;
  opts.use_lattice = false;
  opts.collect_intervals = false;
  opts.collect_final_active = false;
  for (std::uint64_t i = 0; i < replicates; ++i) {
    Rng seed_rng(stream_seed(master_seed, i, Stream::Seeds));
    const std::vector<VertexId> init = sample_uniform(A0, n, seed_rng);
    const PhaseTrace tr =
        run_phases_implicit(n, p, init, stream_seed(master_seed, i, Stream::PhaseOrder),
                            stream_seed(master_seed, i, Stream::Graph), opts);
    xs.push_back(static_cast<double>(tr.phases.front().T_k));
  }
  const MeanVar mv = mean_var(xs);
  NormalityResult res;
  res.sample_mean = mv.mean;
  res.predicted_mean = pred.mean;
  res.sample_var = mv.variance;
  res.predicted_var = pred.variance;
  res.ks = ks_statistic_normal(xs, pred.mean, std::sqrt(pred.variance));
  return res;
}

}  // namespace ringburst
