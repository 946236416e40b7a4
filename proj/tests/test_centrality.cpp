#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "crawlbench/centrality.hpp"
#include "crawlbench/errors.hpp"
#include "crawlbench/generators.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crawlbench;

TEST_CASE("degree scores are literal degrees") {
  const Graph g = make_star(5);
  const auto t = degree_scores(g);
  REQUIRE(t.scores.size() == 5);
  CHECK(t.scores[0] == 4.0);
  CHECK(t.scores[3] == 1.0);
}

TEST_CASE("coreness: clique and barbell") {
  const auto clique = coreness_scores(make_clique(6));
  for (const double s : clique.scores) CHECK(s == 5.0);

  // two 5-cliques: everybody sits in a 4-core, the bridge adds nothing
  const auto barbell = coreness_scores(make_barbell(5, 5));
  for (const double s : barbell.scores) CHECK(s == 4.0);

  const auto path = coreness_scores(make_path(6));
  for (const double s : path.scores) CHECK(s == 1.0);
}

TEST_CASE("coreness matches definition peeling on random graphs") {
  Rng rng(501);
  for (int round = 0; round < 50; ++round) {
    const auto n = static_cast<NodeId>(4 + rng.uniform_index(9));
    const Graph g = oracles::random_connected_graph(n, rng);
    const auto got = coreness_scores(g);
    const auto want = oracles::coreness_by_peeling(g);
    for (NodeId v = 0; v < n; ++v)
      REQUIRE(got.scores[v] == static_cast<double>(want[v]));
  }
}

TEST_CASE("betweenness on tiny fixtures") {
  // path a-b-c: b carries the single a..c pair
  const auto p3 = betweenness_scores(make_path(3));
  CHECK(p3.scores[0] == 0.0);
  CHECK(p3.scores[1] == doctest::Approx(1.0));
  CHECK(p3.scores[2] == 0.0);

  // 4-cycle: every opposite pair has two shortest paths, half a point each
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto t = betweenness_scores(c4);
  for (const double s : t.scores) CHECK(s == doctest::Approx(0.5));

  // star: the hub carries every leaf pair
  const auto s6 = betweenness_scores(make_star(6));
  CHECK(s6.scores[0] == doctest::Approx(10.0));  // C(5,2)
  for (NodeId v = 1; v < 6; ++v) CHECK(s6.scores[v] == 0.0);
}

TEST_CASE("betweenness matches exhaustive path enumeration") {
  Rng rng(777);
  for (int round = 0; round < 40; ++round) {
    const auto n = static_cast<NodeId>(4 + rng.uniform_index(9));
    const Graph g = oracles::random_connected_graph(n, rng);
    const auto got = betweenness_scores(g);
    const auto want = oracles::betweenness_by_enumeration(g);
    for (NodeId v = 0; v < n; ++v)
      REQUIRE(got.scores[v] == doctest::Approx(want[v]).epsilon(1e-9));
  }
}

TEST_CASE("approximate betweenness with all pivots is the exact computation") {
  // P5 center: pairs (a,d),(a,e),(b,d),(b,e) run through it
  Rng rng(3);
  const Graph p5 = make_path(5);
  const auto approx = betweenness_approx(p5, 5, rng);
  CHECK(approx.scores[2] == 4.0);
  const auto exact = betweenness_scores(p5);
  for (NodeId v = 0; v < 5; ++v)
    REQUIRE(approx.scores[v] == exact.scores[v]);  // bitwise, by design

  Rng rng2(99);
  for (int round = 0; round < 10; ++round) {
    const auto n = static_cast<NodeId>(5 + rng2.uniform_index(8));
    const Graph g = oracles::random_connected_graph(n, rng2);
    const auto a = betweenness_approx(g, n, rng2);
    const auto e = betweenness_scores(g);
    for (NodeId v = 0; v < n; ++v) REQUIRE(a.scores[v] == e.scores[v]);
  }
}

TEST_CASE("approximate betweenness tracks exact scores on a scale-free graph") {
  Rng grng(4);
  const Graph g = make_preferential_attachment(500, 2, grng);
  const auto exact = betweenness_scores(g);

  // the 10 highest-scoring nodes by exact betweenness
  std::vector<NodeId> idx(g.node_count());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](NodeId a, NodeId b) {
    return exact.scores[a] > exact.scores[b];
  });
  idx.resize(10);

  // average the pivot estimate across independent draws
  std::vector<double> mean(g.node_count(), 0.0);
  const int draws = 20;
  for (int d = 0; d < draws; ++d) {
    Rng rng(1000 + static_cast<std::uint64_t>(d));
    const auto approx = betweenness_approx(g, 100, rng);
    for (NodeId v = 0; v < g.node_count(); ++v)
      mean[v] += approx.scores[v] / draws;
  }

  for (const NodeId v : idx) {
    const double rel = std::abs(mean[v] - exact.scores[v]) / exact.scores[v];
    CHECK(rel < 0.15);
  }

  Rng rng(0);
  CHECK_THROWS_AS(betweenness_approx(g, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(betweenness_approx(g, g.node_count() + 1, rng),
                  std::invalid_argument);
}

TEST_CASE("eccentricity on fixtures and against all-pairs distances") {
  const auto p4 = eccentricity_scores(make_path(4));
  CHECK(p4.scores == std::vector<double>{3, 2, 2, 3});

  // barbell(4,4): bridge endpoints reach everything within 2
  const auto b = eccentricity_scores(make_barbell(4, 4));
  CHECK(b.scores == std::vector<double>{3, 3, 3, 2, 2, 3, 3, 3});

  Rng rng(888);
  for (int round = 0; round < 30; ++round) {
    const auto n = static_cast<NodeId>(3 + rng.uniform_index(10));
    const Graph g = oracles::random_connected_graph(n, rng);
    const auto got = eccentricity_scores(g);
    const auto want = oracles::eccentricity_by_floyd_warshall(g);
    for (NodeId v = 0; v < n; ++v)
      REQUIRE(got.scores[v] == static_cast<double>(want[v]));
  }
}

TEST_CASE("eccentricity rejects disconnected graphs") {
  const Graph two(2, {});
  CHECK_THROWS_AS(eccentricity_scores(two), DataError);
}

TEST_CASE("target sets: size arithmetic") {
  auto sized = [](std::size_t n) {
    ScoreTable t{Measure::degree, std::vector<double>(n, 1.0)};
    return t;
  };
  CHECK(build_target_set(sized(10), 0.1).members.size() == 1);
  CHECK(build_target_set(sized(15), 0.1).members.size() == 2);   // ceil(1.5)
  CHECK(build_target_set(sized(51083), 0.1).members.size() == 5109);
  CHECK(build_target_set(sized(7), 1.0).members.size() == 7);
  CHECK(build_target_set(sized(3), 0.01).members.size() == 1);  // never empty
}

TEST_CASE("target sets: direction and tie-breaking") {
  ScoreTable t{Measure::degree, {5, 9, 9, 1, 9}};
  const auto top2 = build_target_set(t, 0.4);
  CHECK(top2.members == std::vector<NodeId>{1, 2});  // ties by ascending id
  CHECK_FALSE(top2.minimize);

  ScoreTable e{Measure::eccentricity, {5, 9, 9, 1, 9}};
  const auto low2 = build_target_set(e, 0.4);
  CHECK(low2.members == std::vector<NodeId>{0, 3});  // low scores win
  CHECK(low2.minimize);

  // all-equal scores resolve to the smallest ids
  ScoreTable flat{Measure::coreness, std::vector<double>(10, 2.0)};
  CHECK(build_target_set(flat, 0.3).members == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("target sets: domain errors") {
  ScoreTable t{Measure::degree, {1, 2, 3}};
  CHECK_THROWS_AS(build_target_set(t, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_target_set(t, 1.5), std::invalid_argument);
  ScoreTable empty{Measure::degree, {}};
  CHECK_THROWS_AS(build_target_set(empty, 0.5), std::invalid_argument);
}

TEST_CASE("score csv round-trips exactly") {
  Rng rng(6);
  const Graph g = make_preferential_attachment(40, 2, rng);
  const auto t = betweenness_scores(g);
  std::stringstream buf;
  write_scores_csv(buf, g, t);
  const auto back = read_scores_csv(buf, Measure::betweenness, g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    REQUIRE(back.scores[v] == t.scores[v]);
}
