#pragma once

// Phase-decomposed activation dynamics on ring + random-overlay graphs with
// threshold 2. Each phase k explores: repeatedly draw a uniformly random
// unused active vertex, send one mark along each of its random edges, and
// activate any vertex reaching two cumulative marks; the phase stops after
// step t when exactly t vertices are active in the phase. Expansion then
// activates, in order: (1) length-1 inactive ring intervals, (2) maximal
// marked prefix/suffix runs of the remaining intervals, (3) length-1
// intervals created by step 2. Marks persist across phases.
//
// Two graph sources drive exploration:
//  - a materialised HybridGraph (edges drawn up front), or
//  - an implicit overlay (n, p) that lazily samples each used vertex's random
//    edges towards currently inactive vertices only. Deferred sampling leaves
//    the joint law of every observable output unchanged, because edges among
//    active vertices can never mark an inactive vertex again.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ringburst/graph.hpp"
#include "ringburst/rng.hpp"

namespace ringburst {

struct MarkState {
  std::vector<std::uint16_t> marks;  // size n+1, saturating counters
  std::vector<char> active;          // size n+1
  std::vector<char> used;            // size n+1
  std::vector<VertexId> use_order;   // used vertices in draw order
  std::uint64_t active_count = 0;
};

struct InactiveInterval {
  VertexId start = 0;         // first inactive vertex, ring order
  std::uint32_t length = 0;   // number of consecutive inactive vertices
};

// maximal inactive runs in ring order starting after the smallest active id;
// requires a nonempty, strictly ascending active list with ids in [1, n]
std::vector<InactiveInterval> extract_intervals(const std::vector<VertexId>& active,
                                                std::uint32_t n);

std::map<std::uint32_t, std::uint64_t> interval_counts(
    const std::vector<InactiveInterval>& intervals);

struct ExplorationResult {
  std::uint64_t T_k = 0;                   // steps used by the phase
  std::vector<VertexId> activated;         // newly activated, ascending
  std::vector<std::uint64_t> trajectory;   // |A_k(t)|, t = 0..T_k (optional)
};

struct ExpansionResult {
  std::vector<VertexId> D_k;  // ascending
  std::vector<InactiveInterval> intervals;            // pre-expansion (optional)
  std::map<std::uint32_t, std::uint64_t> counts;      // N_l pre-expansion (optional)
};

struct PhaseOptions {
  bool use_lattice = true;        // off: expansion is a no-op, K = 1
  bool record_trajectory = false;
  bool collect_intervals = true;
  bool collect_final_active = true;
};

struct PhaseRecord {
  std::uint32_t k = 0;
  std::uint64_t T_k = 0;
  std::vector<VertexId> D_k;
  std::vector<std::uint64_t> trajectory;
  std::vector<InactiveInterval> intervals;
  std::map<std::uint32_t, std::uint64_t> interval_counts;
};

struct PhaseTrace {
  std::uint32_t K = 0;
  std::uint64_t T_total = 0;
  std::uint64_t A_star = 0;
  std::vector<PhaseRecord> phases;
  std::vector<VertexId> final_active;  // ascending (optional)

  std::string to_json() const;
};

// Stateful engine running one phase at a time; exposed so tests can inspect
// marks and intervals between phases.
class PhaseEngine {
 public:
  // materialised source; graph must outlive the engine and have dim == 1
  PhaseEngine(const HybridGraph& g, PhaseOptions opts);
  // implicit overlay source; consumes edge randomness incrementally
  PhaseEngine(std::uint32_t n, double p, std::uint64_t edge_seed, PhaseOptions opts);

  // seeds must be unused; already-active seeds (a previous D_k) are allowed
  ExplorationResult exploration_phase(const std::vector<VertexId>& seeds, Rng& order_rng);
  ExpansionResult expansion_phase();

  const MarkState& state() const { return state_; }
  std::uint32_t n() const { return n_; }
  bool all_active() const { return state_.active_count == n_; }

 private:
  void activate(VertexId v);
  void send_marks(VertexId u, std::vector<VertexId>& hits);
  void give_mark(VertexId v, std::vector<VertexId>& newly);

  const HybridGraph* graph_ = nullptr;  // null for the implicit source
  std::uint32_t n_ = 0;
  double p_ = 0.0;
  Rng edge_rng_{0};
  PhaseOptions opts_;
  MarkState state_;
  std::vector<VertexId> pool_;          // active-but-unused, current phase
  std::vector<VertexId> inactive_;      // implicit source only
  std::vector<std::uint32_t> pos_;      // vertex -> index in inactive_
};

// full run to D_K = empty; order_seed drives the uniform unused-active draws
PhaseTrace run_phases(const HybridGraph& g, const std::vector<VertexId>& initial,
                      std::uint64_t order_seed, PhaseOptions opts = {});

PhaseTrace run_phases_implicit(std::uint32_t n, double p,
                               const std::vector<VertexId>& initial,
                               std::uint64_t order_seed, std::uint64_t edge_seed,
                               PhaseOptions opts = {});

}  // namespace ringburst
