#pragma once

// Threshold-r bootstrap cascade on a HybridGraph. Vertices activate once at
// least r distinct neighbours (merged view: a Merged pair counts once) are
// active; rounds are synchronous. The first r incoming active edges, taken in
// processing order with ties inside a round broken by the smaller neighbour
// id, define an activation cause.

#include <cstdint>
#include <string>
#include <vector>

#include "ringburst/graph.hpp"

namespace ringburst {

struct CascadeConfig {
  std::uint32_t r = 2;
  bool use_lattice = true;  // off: pure random-overlay cascade
};

enum class ActivationCause : std::uint8_t {
  None = 0,
  Seed,
  Short,  // all trigger edges local (Merged reads as local)
  Mixed,
  Long,  // all trigger edges random
};

const char* activation_cause_name(ActivationCause c);

// r = 2 triggers; Merged counts as Local with its random reading noted
ActivationCause classify_activation(EdgeKind first, EdgeKind second);

struct CascadeResult {
  std::uint32_t n = 0;
  std::vector<VertexId> final_active;      // ascending
  std::vector<std::int32_t> round;         // size n+1, -1 if never active
  std::vector<ActivationCause> cause;      // size n+1
  bool percolated_fully = false;

  std::string to_json() const;
};

CascadeResult run_bootstrap(const HybridGraph& g,
                            const std::vector<VertexId>& seeds,
                            CascadeConfig cfg = {});

// reference oracle: full rescans until a fixed point; guarded to n <= 10^4
CascadeResult run_bootstrap_naive(const HybridGraph& g,
                                  const std::vector<VertexId>& seeds,
                                  CascadeConfig cfg = {});

}  // namespace ringburst
