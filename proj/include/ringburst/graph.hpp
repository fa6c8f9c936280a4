#pragma once

// Hybrid graph: a deterministic lattice (ring R_n for dim 1, N x N torus with
// von Neumann neighbourhoods for dim 2) superposed with Erdos-Renyi random
// edges G_{n,p}. A pair joined by both a lattice and a random edge is merged
// into a single Merged edge.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringburst/rng.hpp"

namespace ringburst {

using VertexId = std::uint32_t;  // 1-based

enum class EdgeKind : std::uint8_t { Local = 0, Random = 1, Merged = 2 };

const char* edge_kind_name(EdgeKind k);

class HybridGraph {
 public:
  // Each of the C(n,2) pairs becomes a random edge independently with
  // probability p; sampling skips over non-edges geometrically, so expected
  // work is O(p n^2) rather than O(n^2).
  static HybridGraph generate(std::uint32_t n, double p, int dim,
                              std::uint64_t seed);

  // Explicit random-edge overlay (tests, replays). Pairs are normalized,
  // deduplicated and validated.
  static HybridGraph with_edges(std::uint32_t n, int dim,
                                std::vector<std::pair<VertexId, VertexId>> edges,
                                double p = 0.0);

  std::uint32_t n() const { return n_; }
  int dim() const { return dim_; }
  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  std::uint32_t side() const { return side_; }  // dim 2 only, else 0
  std::uint64_t random_edge_count() const { return offsets_.back() / 2; }

  // random-overlay neighbours of v, ascending ids
  std::span<const VertexId> random_neighbors(VertexId v) const;
  bool has_random_edge(VertexId u, VertexId v) const;

  // lattice neighbours of v written to out[]; returns count (2 on the ring,
  // up to 4 on the torus; duplicates from tiny sides are collapsed)
  int lattice_neighbors(VertexId v, VertexId out[4]) const;
  bool lattice_adjacent(VertexId u, VertexId v) const;

  void check_vertex(VertexId v) const;

  std::string to_json() const;  // {"n","dim","p","seed","random_edges":[...]}

 private:
  HybridGraph() = default;
  static void validate_shape(std::uint32_t n, double p, int dim);

  std::uint32_t n_ = 0;
  int dim_ = 1;
  double p_ = 0.0;
  std::uint64_t seed_ = 0;
  std::uint32_t side_ = 0;
  std::vector<std::uint64_t> offsets_;  // CSR over random edges, size n+1
  std::vector<VertexId> targets_;
};

// min{|i-j|, n-|i-j|} on the ring; requires 1 <= i,j <= n
std::uint32_t ring_distance(VertexId i, VertexId j, std::uint32_t n);

// min over S of ring_distance(v, s); S must be nonempty
std::uint32_t distance_to_set(VertexId v, const std::vector<VertexId>& S,
                              std::uint32_t n);

// vertices outside S at ring distance exactly 1 from S, ascending
std::vector<VertexId> outer_boundary(const std::vector<VertexId>& S,
                                     std::uint32_t n);

// merged neighbour view of v: (id, kind) ascending by id; lattice neighbours
// are always present, pairs carrying both edge types appear once as Merged
std::vector<std::pair<VertexId, EdgeKind>> neighbors(const HybridGraph& g,
                                                     VertexId v);

}  // namespace ringburst
