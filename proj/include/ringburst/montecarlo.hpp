#pragma once

// Reproducible experiment runner over the phase/cascade engines, plus the
// statistical checks used by the verification presets. Replicate i derives
// its RNG streams from (master_seed, i, purpose), so reports are byte-stable
// under any worker count.

#include <cstdint>
#include <string>
#include <vector>

#include "ringburst/analytics.hpp"
#include "ringburst/graph.hpp"
#include "ringburst/phases.hpp"
#include "ringburst/stats.hpp"

namespace ringburst {

enum class InitialMode { Count, AlphaOfAc, WindowOffset };

// Count: A0 = round(value); AlphaOfAc: A0 = round(value * a_c);
// WindowOffset: A0 = round(a_c_star + value * sqrt(a_c)). Always clamped to
// [2, n].
struct InitialSpec {
  InitialMode mode = InitialMode::Count;
  double value = 2.0;
};

struct ExperimentConfig {
  std::uint32_t n = 0;
  double p = -1.0;      // direct edge probability; < 0 means "use gamma"
  double gamma = -1.0;  // p = n^-gamma when p is unset
  std::uint32_t dim = 1;
  InitialSpec initial{};
  std::vector<VertexId> forced_seeds{};  // overrides uniform placement
  std::uint64_t replicates = 0;
  std::uint64_t master_seed = 1;
  bool use_lattice = true;
  double almost_threshold = -1.0;  // b*; < 0 means default n^0.9
  std::uint32_t r = 2;
  std::uint32_t workers = 0;  // 0: RINGBURST_WORKERS env, else auto
  bool force_materialized = false;

  double resolved_p() const;
  double resolved_b_star() const;
};

// throws std::invalid_argument naming the offending field
void validate_config(const ExperimentConfig& cfg);

// resolved |A0| for the configured initial spec (forced_seeds take precedence)
std::uint64_t resolve_initial_count(const ExperimentConfig& cfg);

// the uniform (or forced) initial active set of replicate i, ascending
std::vector<VertexId> initial_set_for_replicate(const ExperimentConfig& cfg,
                                                std::uint64_t replicate);

struct ReplicateRow {
  std::uint64_t replicate = 0;
  std::uint64_t A0 = 0;
  std::uint64_t A_star = 0;
  std::uint32_t K = 0;  // 0 when the run used the plain cascade (dim 2 or r != 2)
  std::uint64_t T_total = 0;
  std::vector<std::uint64_t> T_k;
  std::uint64_t T1 = 0;
  std::uint64_t D1_size = 0;
  bool percolated_almost = false;
  bool percolated_fully = false;
};

struct Aggregates {
  double mean_A_star = 0.0;
  double var_A_star = 0.0;
  double mean_ratio_tc = 0.0;  // A*/t_c; NaN when p == 0
  double var_ratio_tc = 0.0;
  double freq_almost = 0.0;
  WilsonInterval ci_almost{};
  double freq_full = 0.0;
  WilsonInterval ci_full{};
  double mean_K = 0.0;
};

struct ExperimentReport {
  ExperimentConfig cfg;  // as given
  double p = 0.0;        // resolved
  double b_star = 0.0;   // resolved
  std::vector<ReplicateRow> rows;
  Aggregates agg{};

  std::string to_csv() const;
  std::string summary_json() const;
  std::string manifest_json() const;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

// exact replay of one replicate, with full interval/trajectory detail
PhaseTrace replay_replicate(const ExperimentConfig& cfg, std::uint64_t replicate,
                            bool full_trajectory);

std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const std::string& text);

struct PercolationEstimate {
  double frequency = 0.0;
  WilsonInterval ci{};
};
PercolationEstimate estimate_percolation_prob(const ExperimentReport& report, double b_star);

struct SubcriticalResult {
  double mean_ratio = 0.0;  // mean A*/t_c
  double phi_alpha = 0.0;
  double abs_error = 0.0;
  double var_ratio = 0.0;
};
SubcriticalResult subcritical_check(const ExperimentReport& report, double alpha);

struct WindowPoint {
  double y = 0.0;
  std::uint64_t A0 = 0;
  double frequency = 0.0;
  WilsonInterval ci{};
  double phi_y = 0.0;  // normal cdf at y
  bool isotonic_violation = false;
};
std::vector<WindowPoint> critical_window_scan(std::uint32_t n, double p,
                                              const std::vector<double>& y_grid,
                                              std::uint64_t replicates,
                                              std::uint64_t master_seed,
                                              bool use_lattice = false,
                                              double b_star = -1.0);

struct PairedRow {
  std::uint64_t A_star_ring = 0;
  std::uint64_t A_star_noring = 0;
  bool almost_ring = false;
  bool almost_noring = false;
};
struct PairedReport {
  std::vector<PairedRow> rows;
  double freq_ring = 0.0;
  double freq_noring = 0.0;
  WilsonInterval ci_ring{};
  WilsonInterval ci_noring{};
};
// same edge set and seeds per replicate, lattice on vs off; the containment
// A*(no ring) <= A*(ring) is asserted in every replicate
PairedReport ring_vs_no_ring(const ExperimentConfig& cfg);

struct D1ScalingResult {
  double mean_D1 = 0.0;
  double mean_T1_sq = 0.0;
  double ratio = 0.0;  // mean_D1 / (2 p mean_T1_sq)
};
D1ScalingResult d1_scaling_check(std::uint32_t n, double p, double alpha,
                                 std::uint64_t replicates, std::uint64_t master_seed);

// exhaustive martingale-defect enumeration; K1 <= 3, t0 <= 4
double martingale_check(std::uint32_t K1, double p, std::uint32_t t0);

struct DoobResult {
  double empirical = 0.0;  // mean of sup_t |S(t) - E S(t)| squared
  double bound = 0.0;      // 4 K pi1(t0) / (1 - pi1(t0))
  double slack = 0.0;      // bound * (1 + 3/sqrt(replicates))
  bool pass = false;
};
DoobResult doob_check(std::uint32_t K, double p, std::uint32_t t0,
                      std::uint64_t replicates, std::uint64_t master_seed);

struct NormalityResult {
  double sample_mean = 0.0;
  double predicted_mean = 0.0;
  double sample_var = 0.0;
  double predicted_var = 0.0;
  double ks = 0.0;
};
// lattice-off runs; compares the first-phase stopping time distribution to
// its normal prediction
NormalityResult normality_check(std::uint32_t n, double p, std::uint64_t A0,
                                std::uint64_t replicates, std::uint64_t master_seed);

}  // namespace ringburst
