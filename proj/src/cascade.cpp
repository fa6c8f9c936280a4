#include "ringburst/cascade.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace ringburst {
namespace {

constexpr std::uint32_t kMaxThreshold = 64;
constexpr std::uint32_t kNaiveLimit = 10000;

bool is_local_kind(EdgeKind k) { return k == EdgeKind::Local || k == EdgeKind::Merged; }

ActivationCause cause_from_triggers(const EdgeKind* trig, std::uint32_t r) {
  bool all_local = true;
  bool all_random = true;
  for (std::uint32_t i = 0; i < r; ++i) {
    if (trig[i] == EdgeKind::Random) all_local = false;
    if (is_local_kind(trig[i])) all_random = false;
  }
  if (all_local) return ActivationCause::Short;
  if (all_random) return ActivationCause::Long;
  return ActivationCause::Mixed;
}

std::vector<VertexId> checked_seeds(const HybridGraph& g, const std::vector<VertexId>& seeds) {
  std::vector<VertexId> s = seeds;
  for (VertexId v : s) g.check_vertex(v);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void validate_config(const CascadeConfig& cfg) {
  if (cfg.r < 2 || cfg.r > kMaxThreshold)
    throw std::invalid_argument("cascade threshold r must be in [2, 64]");
}

}  // namespace

const char* activation_cause_name(ActivationCause c) {
  switch (c) {
    case ActivationCause::None: return "none";
    case ActivationCause::Seed: return "seed";
    case ActivationCause::Short: return "short";
    case ActivationCause::Mixed: return "mixed";
    case ActivationCause::Long: return "long";
  }
  throw std::invalid_argument("unknown activation cause");
}

ActivationCause classify_activation(EdgeKind first, EdgeKind second) {
  const EdgeKind trig[2] = {first, second};
  return cause_from_triggers(trig, 2);
}

CascadeResult run_bootstrap(const HybridGraph& g, const std::vector<VertexId>& seeds,
                            CascadeConfig cfg) {
  validate_config(cfg);
  const std::uint32_t n = g.n();
  CascadeResult res;
  res.n = n;
  res.round.assign(n + 1, -1);
  res.cause.assign(n + 1, ActivationCause::None);

  std::vector<std::uint32_t> count(n + 1, 0);
  std::vector<EdgeKind> trig(static_cast<std::size_t>(n + 1) * cfg.r, EdgeKind::Local);
  std::uint64_t active_count = 0;

  std::vector<VertexId> frontier = checked_seeds(g, seeds);
  for (VertexId v : frontier) {
    res.round[v] = 0;
    res.cause[v] = ActivationCause::Seed;
    ++active_count;
  }

  std::vector<VertexId> next;
  std::int32_t round_no = 0;
  // feeds one active edge of the given kind into u; activates on the r-th
  auto feed = [&](VertexId u, EdgeKind kind) {
    if (res.round[u] >= 0 || count[u] >= cfg.r) return;
    trig[static_cast<std::size_t>(u) * cfg.r + count[u]] = kind;
    if (++count[u] == cfg.r) {
      res.round[u] = round_no + 1;
      res.cause[u] = cause_from_triggers(&trig[static_cast<std::size_t>(u) * cfg.r], cfg.r);
      next.push_back(u);
      ++active_count;
    }
  };

  while (!frontier.empty()) {
    next.clear();
    for (VertexId v : frontier) {
      if (cfg.use_lattice) {
        VertexId nb[4];
        const int cnt = g.lattice_neighbors(v, nb);
        for (int i = 0; i < cnt; ++i) {
          const VertexId u = nb[i];
          if (res.round[u] >= 0) continue;
          feed(u, g.has_random_edge(v, u) ? EdgeKind::Merged : EdgeKind::Local);
        }
      }
      for (VertexId u : g.random_neighbors(v)) {
        if (res.round[u] >= 0) continue;
        if (cfg.use_lattice && g.lattice_adjacent(v, u)) continue;  // fed as Merged above
        feed(u, EdgeKind::Random);
      }
    }
    frontier = next;
    std::sort(frontier.begin(), frontier.end());
    ++round_no;
  }

  res.final_active.reserve(active_count);
  for (VertexId v = 1; v <= n; ++v)
    if (res.round[v] >= 0) res.final_active.push_back(v);
  res.percolated_fully = (active_count == n);
  return res;
}

CascadeResult run_bootstrap_naive(const HybridGraph& g, const std::vector<VertexId>& seeds,
                                  CascadeConfig cfg) {
  validate_config(cfg);
  const std::uint32_t n = g.n();
  if (n > kNaiveLimit)
    throw std::invalid_argument("run_bootstrap_naive is limited to n <= 10000");

  CascadeResult res;
  res.n = n;
  res.round.assign(n + 1, -1);
  res.cause.assign(n + 1, ActivationCause::None);

  std::uint64_t active_count = 0;
  for (VertexId v : checked_seeds(g, seeds)) {
    res.round[v] = 0;
    res.cause[v] = ActivationCause::Seed;
    ++active_count;
  }

  std::int32_t sweep = 0;
  bool changed = active_count > 0;
  while (changed) {
    changed = false;
    ++sweep;
    std::vector<VertexId> newly;
    for (VertexId v = 1; v <= n; ++v) {
      if (res.round[v] >= 0) continue;
      std::uint32_t cnt = 0;
      for (const auto& [u, kind] : neighbors(g, v)) {
        if (!cfg.use_lattice && kind == EdgeKind::Local) continue;
        if (res.round[u] >= 0 && res.round[u] < sweep) ++cnt;
      }
      if (cnt >= cfg.r) newly.push_back(v);
    }
    for (VertexId v : newly) {
      res.round[v] = sweep;
      ++active_count;
      changed = true;
    }
  }

  res.final_active.reserve(active_count);
  for (VertexId v = 1; v <= n; ++v)
    if (res.round[v] >= 0) res.final_active.push_back(v);
  res.percolated_fully = (active_count == n);
  return res;
}

std::string CascadeResult::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["final_size"] = final_active.size();
  j["percolated_fully"] = percolated_fully;
  std::map<std::int32_t, std::uint64_t> hist;
  for (VertexId v = 1; v <= n; ++v)
    if (round[v] >= 0) ++hist[round[v]];
  nlohmann::ordered_json jh = nlohmann::ordered_json::object();
  for (const auto& [r, c] : hist) jh[std::to_string(r)] = c;
  j["rounds_histogram"] = jh;
  nlohmann::ordered_json jc = nlohmann::ordered_json::object();
  std::map<std::string, std::uint64_t> causes;
  for (VertexId v = 1; v <= n; ++v)
    if (cause[v] != ActivationCause::None) ++causes[activation_cause_name(cause[v])];
  for (const auto& [name, c] : causes) jc[name] = c;
  j["cause_counts"] = jc;
  return j.dump(2);
}

}  // namespace ringburst
