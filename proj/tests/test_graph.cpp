#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "ringburst/graph.hpp"
#include "ringburst/rng.hpp"

using namespace ringburst;

namespace {

// upper 0.99 quantiles of the chi-square distribution (standard table)
double chi99(int df) {
  static const double q[] = {0.0,    6.635,  9.210,  11.345, 13.277, 15.086,
                             16.812, 18.475, 20.090, 21.666, 23.209, 24.725,
                             26.217, 27.688, 29.141, 30.578, 32.000, 33.409,
                             34.805, 36.191, 37.566};
  REQUIRE(df >= 1);
  REQUIRE(df <= 20);
  return q[df];
}

}  // namespace

TEST_CASE("ring lattice with p=0 has no random edges and degree 2") {
  HybridGraph g = HybridGraph::generate(6, 0.0, 1, 123);
  CHECK(g.random_edge_count() == 0);
  for (VertexId v = 1; v <= 6; ++v) {
    CHECK(g.random_neighbors(v).empty());
    VertexId nb[4];
    CHECK(g.lattice_neighbors(v, nb) == 2);
  }
  auto nb1 = neighbors(g, 1);
  REQUIRE(nb1.size() == 2);
  CHECK(nb1[0] == std::make_pair(VertexId{2}, EdgeKind::Local));
  CHECK(nb1[1] == std::make_pair(VertexId{6}, EdgeKind::Local));
}

TEST_CASE("p=1 gives the complete overlay with merged ring pairs") {
  HybridGraph g = HybridGraph::generate(5, 1.0, 1, 9);
  CHECK(g.random_edge_count() == 10);
  auto nb1 = neighbors(g, 1);
  REQUIRE(nb1.size() == 4);
  CHECK(nb1[0] == std::make_pair(VertexId{2}, EdgeKind::Merged));
  CHECK(nb1[1] == std::make_pair(VertexId{3}, EdgeKind::Random));
  CHECK(nb1[2] == std::make_pair(VertexId{4}, EdgeKind::Random));
  CHECK(nb1[3] == std::make_pair(VertexId{5}, EdgeKind::Merged));
}

TEST_CASE("random edge count concentrates around its binomial mean") {
  // mean C(n,2) p = 49995, sigma = sqrt(C(n,2) p (1-p)) = 223.4837913585681
  HybridGraph g = HybridGraph::generate(10000, 1e-3, 1, 42);
  const double mean = 49995.0;
  const double four_sigma = 4.0 * 223.4837913585681;
  CHECK(std::fabs(static_cast<double>(g.random_edge_count()) - mean) <= four_sigma);
}

TEST_CASE("generation is a pure function of (n,p,dim,seed)") {
  HybridGraph a = HybridGraph::generate(300, 0.02, 1, 777);
  HybridGraph b = HybridGraph::generate(300, 0.02, 1, 777);
  CHECK(a.to_json() == b.to_json());
  HybridGraph c = HybridGraph::generate(300, 0.02, 1, 778);
  CHECK(a.to_json() != c.to_json());
}

TEST_CASE("each pair appears independently with probability p") {
  const int draws = 4000;
  int hit25 = 0, hit_joint = 0;
  for (int s = 0; s < draws; ++s) {
    HybridGraph g = HybridGraph::generate(8, 0.3, 1, 5000 + s);
    const bool a = g.has_random_edge(2, 5);
    const bool b = g.has_random_edge(3, 7);
    hit25 += a;
    hit_joint += (a && b);
  }
  CHECK(std::fabs(hit25 / double(draws) - 0.3) <= 0.03);        // ~4 sigma
  CHECK(std::fabs(hit_joint / double(draws) - 0.09) <= 0.02);   // ~4 sigma
}

TEST_CASE("vertex degree over many seeds follows Bin(n-1, p)") {
  const int reps = 10000;
  const std::uint32_t n = 50;
  const double p = 0.2;
  // fixed bins: {<=5}, 6..14 individually, {>=15} -> 11 bins, df = 10
  std::vector<double> observed(11, 0.0);
  for (int s = 0; s < reps; ++s) {
    HybridGraph g = HybridGraph::generate(n, p, 1, 90000 + s);
    const auto deg = static_cast<int>(g.random_neighbors(1).size());
    const int bin = deg <= 5 ? 0 : (deg >= 15 ? 10 : deg - 5);
    observed[static_cast<std::size_t>(bin)] += 1.0;
  }
  std::vector<double> pmf(n, 0.0);  // Bin(49, 0.2)
  pmf[0] = std::pow(1.0 - p, 49.0);
  for (std::uint32_t k = 1; k <= 49; ++k)
    pmf[k] = pmf[k - 1] * (double(49 - k + 1) * p) / (double(k) * (1.0 - p));
  std::vector<double> expected(11, 0.0);
  for (std::uint32_t k = 0; k <= 49; ++k) {
    const int bin = k <= 5 ? 0 : (k >= 15 ? 10 : static_cast<int>(k) - 5);
    expected[static_cast<std::size_t>(bin)] += reps * pmf[k];
  }
  double stat = 0.0;
  for (int b = 0; b < 11; ++b) {
    REQUIRE(expected[b] >= 5.0);
    stat += (observed[b] - expected[b]) * (observed[b] - expected[b]) / expected[b];
  }
  CHECK(stat < chi99(10));
}

TEST_CASE("ring_distance matches the cyclic metric") {
  CHECK(ring_distance(1, 5, 6) == 2);
  CHECK(ring_distance(3, 3, 9) == 0);
  CHECK(ring_distance(1, 6, 10) == 5);
  CHECK(ring_distance(5, 1, 6) == 2);  // symmetric
  CHECK_THROWS_AS(ring_distance(0, 1, 6), std::invalid_argument);
  CHECK_THROWS_AS(ring_distance(1, 7, 6), std::invalid_argument);
}

TEST_CASE("ring_distance satisfies the triangle inequality exhaustively") {
  for (std::uint32_t n = 3; n <= 20; ++n)
    for (VertexId i = 1; i <= n; ++i)
      for (VertexId j = 1; j <= n; ++j)
        for (VertexId k = 1; k <= n; ++k)
          CHECK(ring_distance(i, k, n) <=
                ring_distance(i, j, n) + ring_distance(j, k, n));
}

TEST_CASE("distance_to_set takes the minimum over the set") {
  CHECK(distance_to_set(1, {1, 4}, 8) == 0);
  CHECK(distance_to_set(2, {5, 8}, 8) == 2);
  CHECK(distance_to_set(7, {1}, 12) == 6);
  CHECK_THROWS_AS(distance_to_set(1, {}, 8), std::invalid_argument);
}

TEST_CASE("outer_boundary returns the distance-1 shell") {
  CHECK(outer_boundary({3}, 5) == std::vector<VertexId>{2, 4});
  CHECK(outer_boundary({1, 3}, 5) == std::vector<VertexId>{2, 4, 5});
  CHECK(outer_boundary({1, 2, 3, 4, 5, 6, 7}, 7).empty());
  CHECK(outer_boundary({}, 5).empty());
}

TEST_CASE("outer_boundary agrees with brute force on every subset of a 10-ring") {
  const std::uint32_t n = 10;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<VertexId> S;
    for (std::uint32_t v = 1; v <= n; ++v)
      if (mask & (1u << (v - 1))) S.push_back(v);
    std::vector<VertexId> brute;
    if (!S.empty()) {
      for (VertexId v = 1; v <= n; ++v) {
        const bool in_s = mask & (1u << (v - 1));
        if (!in_s && distance_to_set(v, S, n) == 1) brute.push_back(v);
      }
    }
    CHECK(outer_boundary(S, n) == brute);
  }
}

TEST_CASE("torus adjacency is 4-neighbour with wrap-around") {
  HybridGraph g = HybridGraph::generate(9, 0.0, 2, 1);
  CHECK(g.side() == 3);
  VertexId nb[4];
  REQUIRE(g.lattice_neighbors(5, nb) == 4);  // center of the 3x3
  CHECK(std::vector<VertexId>(nb, nb + 4) == std::vector<VertexId>{2, 4, 6, 8});
  REQUIRE(g.lattice_neighbors(1, nb) == 4);  // corner wraps both ways
  CHECK(std::vector<VertexId>(nb, nb + 4) == std::vector<VertexId>{2, 3, 4, 7});
  CHECK(g.lattice_adjacent(1, 7));
  CHECK_FALSE(g.lattice_adjacent(1, 5));
  auto nbs = neighbors(g, 5);
  REQUIRE(nbs.size() == 4);
  for (const auto& [w, kind] : nbs) {
    (void)w;
    CHECK(kind == EdgeKind::Local);
  }
}

TEST_CASE("tiny torus sides collapse duplicate neighbours") {
  HybridGraph g = HybridGraph::generate(4, 0.0, 2, 1);
  VertexId nb[4];
  REQUIRE(g.lattice_neighbors(1, nb) == 2);
  CHECK(std::vector<VertexId>(nb, nb + 2) == std::vector<VertexId>{2, 3});
}

TEST_CASE("shape validation rejects bad inputs") {
  CHECK_THROWS_AS(HybridGraph::generate(2, 0.1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(HybridGraph::generate(10, 0.1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(HybridGraph::generate(10, -0.1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(HybridGraph::generate(10, 1.5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(HybridGraph::generate(10, 0.1, 3, 1), std::invalid_argument);
}

TEST_CASE("with_edges normalizes, deduplicates, and validates") {
  HybridGraph g = HybridGraph::with_edges(6, 1, {{4, 1}, {1, 4}, {1, 2}});
  CHECK(g.random_edge_count() == 2);
  CHECK(g.has_random_edge(1, 4));
  CHECK(g.has_random_edge(4, 1));
  CHECK_FALSE(g.has_random_edge(2, 5));
  auto nb1 = neighbors(g, 1);
  REQUIRE(nb1.size() == 3);
  CHECK(nb1[0] == std::make_pair(VertexId{2}, EdgeKind::Merged));
  CHECK(nb1[1] == std::make_pair(VertexId{4}, EdgeKind::Random));
  CHECK(nb1[2] == std::make_pair(VertexId{6}, EdgeKind::Local));
  CHECK_THROWS_AS(HybridGraph::with_edges(6, 1, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(HybridGraph::with_edges(6, 1, {{1, 7}}), std::invalid_argument);
  CHECK_THROWS_AS(HybridGraph::with_edges(6, 1, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("vertex bounds are enforced") {
  HybridGraph g = HybridGraph::generate(8, 0.0, 1, 1);
  CHECK_THROWS_AS(g.check_vertex(0), std::invalid_argument);
  CHECK_THROWS_AS(g.check_vertex(9), std::invalid_argument);
  CHECK_THROWS_AS(g.random_neighbors(9), std::invalid_argument);
  CHECK_THROWS_AS(neighbors(g, 0), std::invalid_argument);
}

TEST_CASE("json dump lists sorted random edge pairs") {
  HybridGraph g = HybridGraph::with_edges(7, 1, {{5, 2}, {1, 3}, {2, 4}}, 0.25);
  auto j = nlohmann::json::parse(g.to_json());
  CHECK(j["n"] == 7);
  CHECK(j["dim"] == 1);
  CHECK(j["p"] == 0.25);
  auto edges = j["random_edges"];
  REQUIRE(edges.size() == 3);
  std::vector<std::pair<int, int>> got;
  for (const auto& e : edges) got.emplace_back(e[0].get<int>(), e[1].get<int>());
  CHECK(std::is_sorted(got.begin(), got.end()));
  CHECK(got.front() == std::make_pair(1, 3));
}
