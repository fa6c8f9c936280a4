#include "ringburst/phases.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace ringburst {
namespace {

void rb_require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace

std::vector<InactiveInterval> extract_intervals(const std::vector<VertexId>& active,
                                                std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("extract_intervals: n must be >= 3");
  if (active.empty()) throw std::invalid_argument("extract_intervals: active set is empty");
  std::vector<char> is_active(n + 1, 0);
  VertexId prev = 0;
  for (VertexId v : active) {
    if (v < 1 || v > n) throw std::invalid_argument("extract_intervals: vertex out of range");
    if (v <= prev) throw std::invalid_argument("extract_intervals: active list must ascend");
    prev = v;
    is_active[v] = 1;
  }
  std::vector<InactiveInterval> out;
  const VertexId a0 = active.front();
  std::uint32_t cur_len = 0;
  VertexId cur_start = 0;
  for (std::uint64_t i = 1; i < n; ++i) {
    const VertexId v = static_cast<VertexId>((a0 - 1 + i) % n + 1);
    if (!is_active[v]) {
      if (cur_len == 0) cur_start = v;
      ++cur_len;
    } else if (cur_len > 0) {
      out.push_back({cur_start, cur_len});
      cur_len = 0;
    }
  }
  if (cur_len > 0) out.push_back({cur_start, cur_len});
  return out;
}

std::map<std::uint32_t, std::uint64_t> interval_counts(
    const std::vector<InactiveInterval>& intervals) {
  std::map<std::uint32_t, std::uint64_t> out;
  for (const auto& iv : intervals) ++out[iv.length];
  return out;
}

PhaseEngine::PhaseEngine(const HybridGraph& g, PhaseOptions opts)
    : graph_(&g), n_(g.n()), p_(g.p()), opts_(opts) {
  if (g.dim() != 1)
    throw std::invalid_argument("phase decomposition requires a ring (dim == 1) graph");
  state_.marks.assign(n_ + 1, 0);
  state_.active.assign(n_ + 1, 0);
  state_.used.assign(n_ + 1, 0);
}

PhaseEngine::PhaseEngine(std::uint32_t n, double p, std::uint64_t edge_seed, PhaseOptions opts)
    : n_(n), p_(p), edge_rng_(edge_seed), opts_(opts) {
  if (n < 3) throw std::invalid_argument("phase engine requires n >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  state_.marks.assign(n_ + 1, 0);
  state_.active.assign(n_ + 1, 0);
  state_.used.assign(n_ + 1, 0);
  inactive_.resize(n_);
  pos_.assign(n_ + 1, 0);
  for (std::uint32_t v = 1; v <= n_; ++v) {
    inactive_[v - 1] = v;
    pos_[v] = v - 1;
  }
}

void PhaseEngine::activate(VertexId v) {
  rb_require(!state_.active[v], "activate: vertex already active");
  state_.active[v] = 1;
  ++state_.active_count;
  if (!graph_) {
    const std::uint32_t i = pos_[v];
    rb_require(i < inactive_.size() && inactive_[i] == v, "activate: inactive index corrupt");
    const VertexId last = inactive_.back();
    inactive_[i] = last;
    pos_[last] = i;
    inactive_.pop_back();
    pos_[v] = std::numeric_limits<std::uint32_t>::max();
  }
}

void PhaseEngine::send_marks(VertexId u, std::vector<VertexId>& hits) {
  hits.clear();
  // With the lattice in play a random edge parallel to a ring edge is merged
  // and must count once; the ring adjacency already supplies that count in
  // expansion, so no mark travels along it.
  const VertexId ring_prev = opts_.use_lattice ? (u == 1 ? n_ : u - 1) : 0;
  const VertexId ring_next = opts_.use_lattice ? (u == n_ ? 1 : u + 1) : 0;
  auto keep = [&](VertexId w) { return w != ring_prev && w != ring_next; };
  if (graph_) {
    for (VertexId w : graph_->random_neighbors(u))
      if (keep(w)) hits.push_back(w);
    return;
  }
  // lazily sample Bernoulli(p) edges from u to each currently inactive vertex
  if (p_ <= 0.0 || inactive_.empty()) return;
  if (p_ >= 1.0) {
    for (VertexId w : inactive_)
      if (keep(w)) hits.push_back(w);
    return;
  }
  GeometricSkip skip(p_);
  double pos = skip.gap(edge_rng_);
  const double m = static_cast<double>(inactive_.size());
  while (pos < m) {
    const VertexId w = inactive_[static_cast<std::size_t>(pos)];
    if (keep(w)) hits.push_back(w);
    pos += 1.0 + skip.gap(edge_rng_);
  }
}

void PhaseEngine::give_mark(VertexId v, std::vector<VertexId>& newly) {
  if (state_.marks[v] < std::numeric_limits<std::uint16_t>::max()) ++state_.marks[v];
  if (!state_.active[v] && state_.marks[v] >= 2) {
    activate(v);
    newly.push_back(v);
  }
}

ExplorationResult PhaseEngine::exploration_phase(const std::vector<VertexId>& seeds,
                                                 Rng& order_rng) {
  if (seeds.empty()) throw std::invalid_argument("exploration seeds must be nonempty");
  {
    std::vector<VertexId> dup = seeds;
    std::sort(dup.begin(), dup.end());
    if (std::adjacent_find(dup.begin(), dup.end()) != dup.end())
      throw std::invalid_argument("exploration seeds contain duplicates");
  }
  pool_.clear();
  for (VertexId s : seeds) {
    if (s < 1 || s > n_) throw std::invalid_argument("exploration seed out of range");
    if (state_.used[s]) throw std::invalid_argument("exploration seed was already used");
    if (!state_.active[s]) activate(s);
    pool_.push_back(s);
  }

  ExplorationResult out;
  std::uint64_t phase_active = pool_.size();
  std::uint64_t t = 0;
  if (opts_.record_trajectory) out.trajectory.push_back(phase_active);
  std::vector<VertexId> hits;
  std::vector<VertexId> newly;
  auto mark_used = [&](VertexId v) {
    state_.used[v] = 1;
    state_.use_order.push_back(v);
  };

  while (!pool_.empty()) {
    if (all_active()) {
      // no inactive vertex remains, so the leftover draws change nothing;
      // drain the pool deterministically
      std::sort(pool_.begin(), pool_.end());
      for (VertexId v : pool_) {
        ++t;
        mark_used(v);
        if (opts_.record_trajectory) out.trajectory.push_back(phase_active);
      }
      pool_.clear();
      break;
    }
    const std::uint64_t idx = order_rng.below(pool_.size());
    const VertexId u = pool_[idx];
    pool_[idx] = pool_.back();
    pool_.pop_back();
    ++t;
    mark_used(u);
    send_marks(u, hits);
    newly.clear();
    for (VertexId w : hits) give_mark(w, newly);
    for (VertexId w : newly) {
      pool_.push_back(w);
      out.activated.push_back(w);
    }
    phase_active += newly.size();
    if (opts_.record_trajectory) out.trajectory.push_back(phase_active);
  }
  rb_require(t == phase_active, "exploration stopped away from |A_k(t)| == t");

  out.T_k = t;
  std::sort(out.activated.begin(), out.activated.end());
  return out;
}

ExpansionResult PhaseEngine::expansion_phase() {
  ExpansionResult out;
  if (!opts_.use_lattice || all_active()) return out;
  rb_require(state_.active_count > 0, "expansion needs at least one active vertex");

  const auto at = [this](VertexId start, std::uint32_t i) {
    return static_cast<VertexId>((static_cast<std::uint64_t>(start) - 1 + i) % n_ + 1);
  };

  VertexId a0 = 0;
  for (VertexId v = 1; v <= n_; ++v)
    if (state_.active[v]) {
      a0 = v;
      break;
    }
  std::vector<std::pair<VertexId, std::uint32_t>> runs;  // (start, length)
  std::uint32_t cur_len = 0;
  VertexId cur_start = 0;
  for (std::uint64_t i = 1; i < n_; ++i) {
    const VertexId v = at(a0, static_cast<std::uint32_t>(i));
    if (!state_.active[v]) {
      if (cur_len == 0) cur_start = v;
      ++cur_len;
    } else if (cur_len > 0) {
      runs.emplace_back(cur_start, cur_len);
      cur_len = 0;
    }
  }
  if (cur_len > 0) runs.emplace_back(cur_start, cur_len);

  if (opts_.collect_intervals) {
    out.intervals.reserve(runs.size());
    for (const auto& [s, len] : runs) out.intervals.push_back({s, len});
    out.counts = interval_counts(out.intervals);
  }

  std::vector<VertexId> d;
  // step 1: length-1 intervals activate via their two active ring neighbours
  for (auto& [s, len] : runs) {
    if (len == 1) {
      activate(s);
      d.push_back(s);
      len = 0;
    }
  }
  // step 2: absorb maximal marked prefix and suffix runs, endpoints inward
  for (auto& [s, len] : runs) {
    if (len < 2) continue;
    std::uint32_t left = 0;
    while (left < len && state_.marks[at(s, left)] > 0) {
      activate(at(s, left));
      d.push_back(at(s, left));
      ++left;
    }
    if (left == len) {  // fully marked interval activates entirely
      len = 0;
      continue;
    }
    std::uint32_t right = len;
    while (right > left + 1 && state_.marks[at(s, right - 1)] > 0) {
      activate(at(s, right - 1));
      d.push_back(at(s, right - 1));
      --right;
    }
    s = at(s, left);
    len = right - left;
  }
  // step 3: length-1 intervals created by step 2
  for (auto& [s, len] : runs) {
    if (len == 1) {
      activate(s);
      d.push_back(s);
      len = 0;
    }
  }
  // every surviving interval has length >= 2 and mark-free endpoints
  for (const auto& [s, len] : runs) {
    if (len == 0) continue;
    rb_require(len >= 2, "expansion left a singleton interval");
    rb_require(state_.marks[s] == 0 && state_.marks[at(s, len - 1)] == 0,
               "expansion left a marked interval endpoint");
  }

  std::sort(d.begin(), d.end());
  out.D_k = std::move(d);
  return out;
}

namespace {

PhaseTrace run_phase_loop(PhaseEngine& eng, const std::vector<VertexId>& initial,
                          std::uint64_t order_seed, const PhaseOptions& opts) {
  if (initial.size() < 2)
    throw std::invalid_argument("initial active set needs at least 2 vertices");
  Rng order(order_seed);
  PhaseTrace tr;
  std::vector<VertexId> seeds = initial;
  std::uint32_t k = 0;
  while (true) {
    ++k;
    PhaseRecord rec;
    rec.k = k;
    ExplorationResult ex = eng.exploration_phase(seeds, order);
    ExpansionResult dk = eng.expansion_phase();
    rec.T_k = ex.T_k;
    rec.trajectory = std::move(ex.trajectory);
    rec.intervals = std::move(dk.intervals);
    rec.interval_counts = std::move(dk.counts);
    seeds = dk.D_k;
    rec.D_k = std::move(dk.D_k);
    tr.T_total += rec.T_k;
    tr.phases.push_back(std::move(rec));
    if (seeds.empty()) break;
  }
  tr.K = k;
  tr.A_star = eng.state().active_count;
  rb_require(tr.A_star == tr.T_total, "phase bookkeeping: final size != sum of T_k");
  if (opts.collect_final_active) {
    tr.final_active.reserve(tr.A_star);
    for (VertexId v = 1; v <= eng.n(); ++v)
      if (eng.state().active[v]) tr.final_active.push_back(v);
  }
  return tr;
}

}  // namespace

PhaseTrace run_phases(const HybridGraph& g, const std::vector<VertexId>& initial,
                      std::uint64_t order_seed, PhaseOptions opts) {
  PhaseEngine eng(g, opts);
  return run_phase_loop(eng, initial, order_seed, opts);
}

PhaseTrace run_phases_implicit(std::uint32_t n, double p, const std::vector<VertexId>& initial,
                               std::uint64_t order_seed, std::uint64_t edge_seed,
                               PhaseOptions opts) {
  PhaseEngine eng(n, p, edge_seed, opts);
  return run_phase_loop(eng, initial, order_seed, opts);
}

std::string PhaseTrace::to_json() const {
  nlohmann::ordered_json j;
  j["phases"] = nlohmann::ordered_json::array();
  for (const auto& rec : phases) {
    nlohmann::ordered_json jp;
    jp["k"] = rec.k;
    jp["T_k"] = rec.T_k;
    jp["D_k_size"] = rec.D_k.size();
    nlohmann::ordered_json jn = nlohmann::ordered_json::object();
    for (const auto& [len, cnt] : rec.interval_counts) jn[std::to_string(len)] = cnt;
    jp["N_l"] = jn;
    if (!rec.trajectory.empty()) jp["trajectory"] = rec.trajectory;
    j["phases"].push_back(std::move(jp));
  }
  j["K"] = K;
  j["T_total"] = T_total;
  j["A_star"] = A_star;
  return j.dump(2);
}

}  // namespace ringburst
