#include "ringburst/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace ringburst {

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Local: return "Local";
    case EdgeKind::Random: return "Random";
    case EdgeKind::Merged: return "Merged";
  }
  return "?";
}

void HybridGraph::validate_shape(std::uint32_t n, double p, int dim) {
  if (n < 3) throw std::invalid_argument("HybridGraph: n must be >= 3");
  if (!(p >= 0.0) || p > 1.0)
    throw std::invalid_argument("HybridGraph: p must be in [0,1]");
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("HybridGraph: dim must be 1 or 2");
  if (dim == 2) {
    auto side = static_cast<std::uint32_t>(std::lround(std::sqrt(double(n))));
    if (side * side != n)
      throw std::invalid_argument("HybridGraph: dim 2 needs a square n");
  }
}

void HybridGraph::check_vertex(VertexId v) const {
  if (v < 1 || v > n_)
    throw std::invalid_argument("HybridGraph: vertex id out of range");
}

namespace {

// Walks the lexicographic index space of unordered pairs (i<j), 0-based.
struct PairCursor {
  std::uint64_t row = 0;        // current i
  std::uint64_t row_start = 0;  // linear index of pair (i, i+1)
  std::uint64_t n;

  explicit PairCursor(std::uint64_t n_) : n(n_) {}

  // maps a non-decreasing linear index to (i,j)
  std::pair<std::uint32_t, std::uint32_t> locate(std::uint64_t idx) {
    std::uint64_t row_len = n - 1 - row;
    while (idx - row_start >= row_len) {
      row_start += row_len;
      ++row;
      row_len = n - 1 - row;
    }
    return {static_cast<std::uint32_t>(row),
            static_cast<std::uint32_t>(row + 1 + (idx - row_start))};
  }
};

// Replays the geometric-skip edge stream and hands each edge to sink(i,j)
// with 0-based endpoints.
template <typename Sink>
void for_each_random_edge(std::uint32_t n, double p, std::uint64_t seed,
                          Sink&& sink) {
  if (p <= 0.0) return;
  Rng rng(stream_seed(seed, 0, Stream::Graph));
  GeometricSkip skip(p);
  const auto total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  PairCursor cur(n);
  double pos = skip.gap(rng);
  while (pos < static_cast<double>(total)) {
    auto idx = static_cast<std::uint64_t>(pos);
    if (idx >= total) break;
    auto [i, j] = cur.locate(idx);
    sink(i, j);
    pos = static_cast<double>(idx) + 1.0 + skip.gap(rng);
  }
}

}  // namespace

HybridGraph HybridGraph::generate(std::uint32_t n, double p, int dim,
                                  std::uint64_t seed) {
  validate_shape(n, p, dim);
  HybridGraph g;
  g.n_ = n;
  g.dim_ = dim;
  g.p_ = p;
  g.seed_ = seed;
  g.side_ = (dim == 2)
                ? static_cast<std::uint32_t>(std::lround(std::sqrt(double(n))))
                : 0;

  // two passes over the same stream: count degrees, then fill; avoids an
  // intermediate edge-pair buffer on large graphs
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for_each_random_edge(n, p, seed, [&](std::uint32_t i, std::uint32_t j) {
    ++g.offsets_[i + 1];
    ++g.offsets_[j + 1];
  });
  for (std::size_t v = 1; v <= n; ++v) g.offsets_[v] += g.offsets_[v - 1];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for_each_random_edge(n, p, seed, [&](std::uint32_t i, std::uint32_t j) {
    g.targets_[fill[i]++] = j + 1;
    g.targets_[fill[j]++] = i + 1;
  });
  // rows mix i-side and j-side insertions, so sort each once
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  return g;
}

HybridGraph HybridGraph::with_edges(
    std::uint32_t n, int dim, std::vector<std::pair<VertexId, VertexId>> edges,
    double p) {
  validate_shape(n, p, dim);
  for (auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("with_edges: vertex id out of range");
    if (a == b) throw std::invalid_argument("with_edges: self-loop");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  HybridGraph g;
  g.n_ = n;
  g.dim_ = dim;
  g.p_ = p;
  g.seed_ = 0;
  g.side_ = (dim == 2)
                ? static_cast<std::uint32_t>(std::lround(std::sqrt(double(n))))
                : 0;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto& [a, b] : edges) {
    ++g.offsets_[a];
    ++g.offsets_[b];
  }
  for (std::size_t v = 1; v <= n; ++v) g.offsets_[v] += g.offsets_[v - 1];
  g.targets_.resize(2 * edges.size());
  {
    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto& [a, b] : edges) {
      g.targets_[fill[a - 1]++] = b;
      g.targets_[fill[b - 1]++] = a;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  return g;
}

std::span<const VertexId> HybridGraph::random_neighbors(VertexId v) const {
  check_vertex(v);
  return {targets_.data() + offsets_[v - 1], targets_.data() + offsets_[v]};
}

bool HybridGraph::has_random_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  auto row = random_neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

int HybridGraph::lattice_neighbors(VertexId v, VertexId out[4]) const {
  check_vertex(v);
  if (dim_ == 1) {
    out[0] = (v == 1) ? n_ : v - 1;
    out[1] = (v == n_) ? 1 : v + 1;
    if (out[0] > out[1]) std::swap(out[0], out[1]);
    return 2;
  }
  const std::uint32_t N = side_;
  std::uint32_t r = (v - 1) / N, c = (v - 1) % N;
  VertexId cand[4] = {
      static_cast<VertexId>(((r + N - 1) % N) * N + c + 1),
      static_cast<VertexId>(((r + 1) % N) * N + c + 1),
      static_cast<VertexId>(r * N + (c + N - 1) % N + 1),
      static_cast<VertexId>(r * N + (c + 1) % N + 1),
  };
  std::sort(cand, cand + 4);
  int cnt = 0;
  for (int k = 0; k < 4; ++k)
    if ((k == 0 || cand[k] != cand[k - 1]) && cand[k] != v) out[cnt++] = cand[k];
  return cnt;
}

bool HybridGraph::lattice_adjacent(VertexId u, VertexId v) const {
  VertexId nb[4];
  int c = lattice_neighbors(u, nb);
  for (int k = 0; k < c; ++k)
    if (nb[k] == v) return true;
  return false;
}

std::string HybridGraph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["dim"] = dim_;
  j["p"] = p_;
  j["seed"] = seed_;
  auto edges = nlohmann::ordered_json::array();
  for (std::uint32_t v = 1; v <= n_; ++v)
    for (VertexId w : random_neighbors(v))
      if (w > v) edges.push_back({v, w});
  j["random_edges"] = std::move(edges);
  return j.dump();
}

std::uint32_t ring_distance(VertexId i, VertexId j, std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("ring_distance: n must be >= 3");
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("ring_distance: vertex id out of range");
  std::uint32_t d = (i > j) ? i - j : j - i;
  return std::min(d, n - d);
}

std::uint32_t distance_to_set(VertexId v, const std::vector<VertexId>& S,
                              std::uint32_t n) {
  if (S.empty()) throw std::invalid_argument("distance_to_set: empty set");
  std::uint32_t best = n;
  for (VertexId s : S) best = std::min(best, ring_distance(v, s, n));
  return best;
}

std::vector<VertexId> outer_boundary(const std::vector<VertexId>& S,
                                     std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("outer_boundary: n must be >= 3");
  std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId s : S) {
    if (s < 1 || s > n)
      throw std::invalid_argument("outer_boundary: vertex id out of range");
    in_s[s] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId s : S) {
    VertexId nb[2] = {(s == 1) ? n : s - 1, (s == n) ? 1 : s + 1};
    for (VertexId w : nb)
      if (!in_s[w]) {
        out.push_back(w);
        in_s[w] = 2;  // avoid duplicates without a second membership pass
      }
  }
  for (VertexId v : out) in_s[v] = 0;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<VertexId, EdgeKind>> neighbors(const HybridGraph& g,
                                                     VertexId v) {
  g.check_vertex(v);
  std::vector<std::pair<VertexId, EdgeKind>> out;
  VertexId lat[4];
  int c = g.lattice_neighbors(v, lat);
  for (int k = 0; k < c; ++k)
    out.emplace_back(lat[k], g.has_random_edge(v, lat[k]) ? EdgeKind::Merged
                                                          : EdgeKind::Local);
  for (VertexId w : g.random_neighbors(v))
    if (!g.lattice_adjacent(v, w)) out.emplace_back(w, EdgeKind::Random);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ringburst
