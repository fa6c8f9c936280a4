#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "ringburst/cascade.hpp"
#include "ringburst/graph.hpp"
#include "ringburst/rng.hpp"

using namespace ringburst;

namespace {

// asynchronous closure in a random scan order; the final set of a monotone
// threshold rule is order-free, so this cross-checks the engine's frontier
std::vector<VertexId> async_closure(const HybridGraph& g,
                                    std::vector<VertexId> seeds,
                                    const CascadeConfig& cfg, Rng& rng) {
  std::vector<char> active(g.n() + 1, 0);
  for (VertexId v : seeds) active[v] = 1;
  std::vector<VertexId> order(g.n());
  std::iota(order.begin(), order.end(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);
    for (VertexId v : order) {
      if (active[v]) continue;
      std::uint32_t cnt = 0;
      for (const auto& [u, kind] : neighbors(g, v)) {
        if (!cfg.use_lattice && kind == EdgeKind::Local) continue;
        if (active[u]) ++cnt;
      }
      if (cnt >= cfg.r) {
        active[v] = 1;
        changed = true;
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= g.n(); ++v)
    if (active[v]) out.push_back(v);
  return out;
}

std::vector<VertexId> random_seeds(Rng& rng, std::uint32_t n, std::size_t k) {
  std::vector<VertexId> s;
  while (s.size() < k) {
    VertexId v = 1 + static_cast<VertexId>(rng.below(n));
    if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
  }
  return s;
}

}  // namespace

TEST_CASE("pure ring cascade closes the gap between adjacent seeds") {
  HybridGraph g = HybridGraph::generate(5, 0.0, 1, 7);
  CascadeResult res = run_bootstrap(g, {1, 3});
  CHECK(res.final_active == std::vector<VertexId>{1, 2, 3});
  CHECK(res.cause[1] == ActivationCause::Seed);
  CHECK(res.cause[3] == ActivationCause::Seed);
  CHECK(res.cause[2] == ActivationCause::Short);
  CHECK(res.round[1] == 0);
  CHECK(res.round[2] == 1);
  CHECK(res.round[4] == -1);
  CHECK(res.cause[4] == ActivationCause::None);
  CHECK_FALSE(res.percolated_fully);
}

TEST_CASE("empty seed set stays empty") {
  HybridGraph g = HybridGraph::generate(8, 0.5, 1, 3);
  CascadeResult res = run_bootstrap(g, {});
  CHECK(res.final_active.empty());
  CHECK_FALSE(res.percolated_fully);
  CascadeResult naive = run_bootstrap_naive(g, {});
  CHECK(naive.final_active.empty());
}

TEST_CASE("seeding every vertex marks everyone as a seed") {
  HybridGraph g = HybridGraph::generate(6, 0.3, 1, 11);
  std::vector<VertexId> all{1, 2, 3, 4, 5, 6};
  CascadeResult res = run_bootstrap(g, all);
  CHECK(res.final_active == all);
  CHECK(res.percolated_fully);
  for (VertexId v = 1; v <= 6; ++v) {
    CHECK(res.cause[v] == ActivationCause::Seed);
    CHECK(res.round[v] == 0);
  }
}

TEST_CASE("reference closure on the bare ring") {
  HybridGraph g = HybridGraph::generate(6, 0.0, 1, 1);
  CHECK(run_bootstrap_naive(g, {1, 4}).final_active ==
        std::vector<VertexId>{1, 4});
  CascadeResult full = run_bootstrap_naive(g, {1, 3, 5});
  CHECK(full.final_active == std::vector<VertexId>{1, 2, 3, 4, 5, 6});
  CHECK(full.percolated_fully);
}

TEST_CASE("merged pair feeds a vertex once, not twice") {
  HybridGraph g = HybridGraph::with_edges(5, 1, {{1, 2}});
  CascadeResult res = run_bootstrap(g, {1});
  CHECK(res.final_active == std::vector<VertexId>{1});
}

TEST_CASE("trigger classification") {
  CHECK(classify_activation(EdgeKind::Local, EdgeKind::Local) ==
        ActivationCause::Short);
  CHECK(classify_activation(EdgeKind::Merged, EdgeKind::Local) ==
        ActivationCause::Short);
  CHECK(classify_activation(EdgeKind::Merged, EdgeKind::Merged) ==
        ActivationCause::Short);
  CHECK(classify_activation(EdgeKind::Random, EdgeKind::Random) ==
        ActivationCause::Long);
  CHECK(classify_activation(EdgeKind::Local, EdgeKind::Random) ==
        ActivationCause::Mixed);
  CHECK(classify_activation(EdgeKind::Random, EdgeKind::Merged) ==
        ActivationCause::Mixed);
  CHECK(std::string(activation_cause_name(ActivationCause::Seed)) == "seed");
  CHECK(std::string(activation_cause_name(ActivationCause::Short)) == "short");
  CHECK(std::string(activation_cause_name(ActivationCause::Mixed)) == "mixed");
  CHECK(std::string(activation_cause_name(ActivationCause::Long)) == "long");
}

TEST_CASE("threshold three needs a third independent neighbour") {
  HybridGraph g = HybridGraph::with_edges(6, 1, {{2, 5}});
  CascadeConfig cfg;
  cfg.r = 3;
  CascadeResult res = run_bootstrap(g, {1, 3, 5}, cfg);
  CHECK(res.final_active == std::vector<VertexId>{1, 2, 3, 5});
  CHECK(res.cause[2] == ActivationCause::Mixed);
  CHECK(res.round[4] == -1);
}

TEST_CASE("config and seed validation") {
  HybridGraph g = HybridGraph::generate(10, 0.1, 1, 5);
  CascadeConfig bad;
  bad.r = 1;
  CHECK_THROWS_AS(run_bootstrap(g, {1, 2}, bad), std::invalid_argument);
  bad.r = 65;
  CHECK_THROWS_AS(run_bootstrap(g, {1, 2}, bad), std::invalid_argument);
  CHECK_THROWS_AS(run_bootstrap(g, {0}), std::invalid_argument);
  CHECK_THROWS_AS(run_bootstrap(g, {11}), std::invalid_argument);
  // duplicates collapse
  CascadeResult res = run_bootstrap(g, {4, 4, 4});
  CHECK(res.round[4] == 0);

  HybridGraph big = HybridGraph::generate(10001, 0.0, 1, 1);
  CHECK_THROWS_AS(run_bootstrap_naive(big, {1, 2}), std::invalid_argument);
}

TEST_CASE("frontier engine agrees with the rescanning reference") {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t n = 10 + static_cast<std::uint32_t>(rng.below(91));
    const double p = 0.02 + rng.unit() * 0.15;
    HybridGraph g = HybridGraph::generate(n, p, 1, rng.next_u64());
    CascadeConfig cfg;
    cfg.r = 2 + static_cast<std::uint32_t>(rng.below(2));
    cfg.use_lattice = rng.bernoulli(0.8);
    auto seeds = random_seeds(rng, n, 2 + rng.below(n / 3 + 1));
    CascadeResult fast = run_bootstrap(g, seeds, cfg);
    CascadeResult ref = run_bootstrap_naive(g, seeds, cfg);
    REQUIRE(fast.final_active == ref.final_active);
    REQUIRE(fast.round == ref.round);
    CHECK(fast.percolated_fully == ref.percolated_fully);
  }
}

TEST_CASE("growing the seed set never shrinks the closure") {
  Rng rng(515);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = 10 + static_cast<std::uint32_t>(rng.below(91));
    HybridGraph g = HybridGraph::generate(n, 0.05 + rng.unit() * 0.1, 1,
                                          rng.next_u64());
    auto small = random_seeds(rng, n, 2 + rng.below(4));
    auto large = small;
    for (VertexId extra : random_seeds(rng, n, 1 + rng.below(4)))
      if (std::find(large.begin(), large.end(), extra) == large.end())
        large.push_back(extra);
    auto a = run_bootstrap(g, small).final_active;
    auto b = run_bootstrap(g, large).final_active;
    REQUIRE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("dropping the lattice never grows the closure") {
  Rng rng(616);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = 10 + static_cast<std::uint32_t>(rng.below(191));
    HybridGraph g = HybridGraph::generate(n, 0.03 + rng.unit() * 0.1, 1,
                                          rng.next_u64());
    auto seeds = random_seeds(rng, n, 2 + rng.below(5));
    CascadeConfig with, without;
    without.use_lattice = false;
    auto a = run_bootstrap(g, seeds, without).final_active;
    auto b = run_bootstrap(g, seeds, with).final_active;
    REQUIRE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("final set is independent of the activation order") {
  Rng rng(717);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t n = 10 + static_cast<std::uint32_t>(rng.below(91));
    HybridGraph g = HybridGraph::generate(n, 0.05 + rng.unit() * 0.1, 1,
                                          rng.next_u64());
    CascadeConfig cfg;
    cfg.use_lattice = rng.bernoulli(0.5);
    auto seeds = random_seeds(rng, n, 2 + rng.below(5));
    auto engine = run_bootstrap(g, seeds, cfg).final_active;
    auto shuffled = async_closure(g, seeds, cfg, rng);
    REQUIRE(engine == shuffled);
  }
}

TEST_CASE("round numbers are shortest activation times") {
  Rng rng(818);
  for (int i = 0; i < 50; ++i) {
    const std::uint32_t n = 10 + static_cast<std::uint32_t>(rng.below(91));
    HybridGraph g = HybridGraph::generate(n, 0.1, 1, rng.next_u64());
    auto seeds = random_seeds(rng, n, 3);
    CascadeResult res = run_bootstrap(g, seeds);
    for (VertexId v = 1; v <= n; ++v) {
      if (res.round[v] < 0) {
        CHECK(res.cause[v] == ActivationCause::None);
        continue;
      }
      if (res.round[v] == 0) {
        CHECK(res.cause[v] == ActivationCause::Seed);
        continue;
      }
      CHECK(res.cause[v] != ActivationCause::None);
      CHECK(res.cause[v] != ActivationCause::Seed);
      // at least r neighbours were active strictly earlier
      std::uint32_t earlier = 0;
      for (const auto& [u, kind] : neighbors(g, v))
        if (res.round[u] >= 0 && res.round[u] < res.round[v]) ++earlier;
      CHECK(earlier >= 2);
    }
  }
}

TEST_CASE("cascade report serialization") {
  HybridGraph g = HybridGraph::generate(5, 0.0, 1, 7);
  CascadeResult res = run_bootstrap(g, {1, 3});
  auto j = nlohmann::json::parse(res.to_json());
  CHECK(j["n"] == 5);
  CHECK(j["final_size"] == 3);
  CHECK(j["percolated_fully"] == false);
  CHECK(j["rounds_histogram"]["0"] == 2);
  CHECK(j["rounds_histogram"]["1"] == 1);
  CHECK(j["cause_counts"]["seed"] == 2);
  CHECK(j["cause_counts"]["short"] == 1);

  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t n = 10 + static_cast<std::uint32_t>(rng.below(50));
    HybridGraph h = HybridGraph::generate(n, 0.1, 1, rng.next_u64());
    CascadeResult r2 = run_bootstrap(h, random_seeds(rng, n, 3));
    auto k = nlohmann::json::parse(r2.to_json());
    std::uint64_t cause_sum = 0;
    for (const auto& [key, val] : k["cause_counts"].items())
      cause_sum += val.get<std::uint64_t>();
    std::uint64_t round_sum = 0;
    for (const auto& [key, val] : k["rounds_histogram"].items())
      round_sum += val.get<std::uint64_t>();
    CHECK(cause_sum == k["final_size"].get<std::uint64_t>());
    CHECK(round_sum == k["final_size"].get<std::uint64_t>());
  }
}

TEST_CASE("torus cascade respects the four-neighbour rule") {
  HybridGraph g = HybridGraph::generate(9, 0.0, 2, 0);
  // 3x3 torus: centre vertex 5 touches 2,4,6,8
  CascadeResult res = run_bootstrap(g, {2, 4});
  CHECK(res.round[5] == 1);
  CHECK(res.cause[5] == ActivationCause::Short);
  CHECK(std::find(res.final_active.begin(), res.final_active.end(), 5) !=
        res.final_active.end());
  CascadeResult ref = run_bootstrap_naive(g, {2, 4});
  CHECK(res.final_active == ref.final_active);
}
