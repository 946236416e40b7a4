#include <cmath>
#include <map>

#include "crawlbench/generators.hpp"
#include "crawlbench/metrics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crawlbench;

namespace {

CoverageCurve plain(std::vector<double> values,
                    MetricKind kind = MetricKind::node_coverage) {
  CoverageCurve c;
  c.kind = kind;
  c.values = std::move(values);
  return c;
}

}  // namespace

TEST_CASE("node coverage on a hand-traced bfs") {
  // path 0-1-2-3, bfs from 0: queries 0,1,2,3; observations arrive one ahead
  const auto run = run_crawl(make_path(4), StrategyKind::bfs, 0, 0);
  const auto curve = node_coverage(run);
  CHECK(curve.values == std::vector<double>{0.5, 0.75, 1.0, 1.0});
  CHECK(auc(curve) == doctest::Approx((0.5 + 0.75 + 1.0 + 1.0) / 4.0));
}

TEST_CASE("target coverage: closed lags observed, both end at 1") {
  Rng rng(10);
  const Graph g = oracles::random_connected_graph(30, rng);
  const auto targets = build_target_set(degree_scores(g), 0.2);

  for (const auto kind : {StrategyKind::bfs, StrategyKind::mod,
                          StrategyKind::rc}) {
    const auto run = run_crawl(g, kind, 1, 77);
    const auto closed = target_coverage(run, targets, MetricKind::target_closed);
    const auto observed =
        target_coverage(run, targets, MetricKind::target_observed);
    REQUIRE(closed.values.size() == run.trace.size());
    REQUIRE(observed.values.size() == run.trace.size());
    CHECK(closed.values.back() == 1.0);
    CHECK(observed.values.back() == 1.0);
    for (std::size_t i = 0; i < closed.values.size(); ++i) {
      CHECK(observed.values[i] >= closed.values[i]);
      if (i > 0) {
        CHECK(closed.values[i] >= closed.values[i - 1]);
        CHECK(observed.values[i] >= observed.values[i - 1]);
      }
    }
  }
}

TEST_CASE("target coverage counts a seed that is itself a target") {
  // star hub is the whole 10% target of a 10-node star
  const Graph g = make_star(10);
  const auto ts = build_target_set(degree_scores(g), 0.1);
  REQUIRE(ts.members == std::vector<NodeId>{0});

  const auto from_hub = run_crawl(g, StrategyKind::bfs, 0, 0);
  const auto observed =
      target_coverage(from_hub, ts, MetricKind::target_observed);
  CHECK(observed.values.front() == 1.0);  // the seed was observed at step 0
  const auto closed = target_coverage(from_hub, ts, MetricKind::target_closed);
  CHECK(closed.values.front() == 1.0);  // and the first query closed it
}

TEST_CASE("target coverage rejects mismatched graphs") {
  const auto run = run_crawl(make_path(4), StrategyKind::bfs, 0, 0);
  const auto other = build_target_set(degree_scores(make_path(9)), 0.5);
  CHECK_THROWS_AS(target_coverage(run, other, MetricKind::target_closed),
                  std::invalid_argument);
  const auto ok = build_target_set(degree_scores(make_path(4)), 0.5);
  CHECK_THROWS_AS(target_coverage(run, ok, MetricKind::node_coverage),
                  std::invalid_argument);
}

TEST_CASE("average curves: pointwise mean, strict length check") {
  const auto avg = average_curves(
      {plain({0.0, 1.0}), plain({1.0, 1.0})});
  CHECK(avg.values == std::vector<double>{0.5, 1.0});

  const auto same = average_curves({plain({0.25, 0.5}), plain({0.25, 0.5})});
  CHECK(same.values == std::vector<double>{0.25, 0.5});

  CHECK_THROWS_AS(average_curves({plain({1.0}), plain({1.0, 1.0})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(average_curves({}), std::invalid_argument);
}

TEST_CASE("averaging keeps monotonicity") {
  Rng rng(17);
  std::vector<CoverageCurve> curves;
  for (int c = 0; c < 6; ++c) {
    std::vector<double> v(50);
    double x = 0.0;
    for (auto& e : v) {
      x = std::min(1.0, x + rng.uniform_unit() * 0.08);
      e = x;
    }
    curves.push_back(plain(std::move(v)));
  }
  const auto avg = average_curves(curves);
  for (std::size_t i = 1; i < avg.values.size(); ++i)
    CHECK(avg.values[i] >= avg.values[i - 1]);
}

TEST_CASE("auc basics") {
  CHECK(auc(plain({0.5, 1.0})) == 0.75);
  CHECK(auc(plain({1.0})) == 1.0);
  CHECK_THROWS_AS(auc(plain({})), std::invalid_argument);
}

TEST_CASE("auc commutes with curve averaging") {
  Rng rng(23);
  std::vector<CoverageCurve> curves;
  double auc_mean = 0.0;
  for (int c = 0; c < 8; ++c) {
    std::vector<double> v(64);
    for (auto& e : v) e = rng.uniform_unit();
    curves.push_back(plain(std::move(v)));
    auc_mean += auc(curves.back()) / 8.0;
  }
  CHECK(std::abs(auc(average_curves(curves)) - auc_mean) < 1e-12);
}

TEST_CASE("gap to best: zero for the leader, non-positive everywhere") {
  // dyadic values so the expected differences are exact in binary
  std::map<std::string, CoverageCurve> input{
      {"a", plain({0.25, 0.75, 1.0})},
      {"b", plain({0.5, 0.5, 1.0})},
  };
  const auto gaps = gap_to_best(input);
  CHECK(gaps.at("a").values == std::vector<double>{-0.25, 0.0, 0.0});
  CHECK(gaps.at("b").values == std::vector<double>{0.0, -0.25, 0.0});

  std::map<std::string, CoverageCurve> twins{
      {"x", plain({0.3, 0.9})},
      {"y", plain({0.3, 0.9})},
  };
  for (const auto& entry : gap_to_best(twins))
    for (const double v : entry.second.values) CHECK(v == 0.0);

  std::map<std::string, CoverageCurve> lonely{{"a", plain({1.0})}};
  CHECK_THROWS_AS(gap_to_best(lonely), std::invalid_argument);
}

TEST_CASE("winner tally: sweeps, ties, completeness") {
  AucTable table;
  const char* graphs[] = {"g1", "g2", "g3", "g4", "g5", "g6"};
  for (const char* g : graphs) {
    table[g]["mod"]["coreness"] = 0.9;
    table[g]["rc"]["coreness"] = 0.5;
    table[g]["mod"]["degree"] = 0.8;
    table[g]["rc"]["degree"] = 0.8;  // exact tie on every graph
  }
  const auto tally = winner_tally(table);
  CHECK(tally.at("coreness").at("mod") == 6);
  CHECK(tally.at("coreness").at("rc") == 0);
  CHECK(tally.at("degree").at("mod") == 6);
  CHECK(tally.at("degree").at("rc") == 6);

  table["g7"]["mod"]["coreness"] = 1.0;  // missing rc and degree keys
  CHECK_THROWS_AS(winner_tally(table), std::invalid_argument);
  CHECK_THROWS_AS(winner_tally(AucTable{}), std::invalid_argument);
}
