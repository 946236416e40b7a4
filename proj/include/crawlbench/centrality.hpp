#pragma once

// Node influence scores and the target sets derived from them. Betweenness
// counts each unordered pair once and excludes endpoints, with no
// normalization; eccentricity targets are the low scores, everything else
// the high ones.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "crawlbench/graph.hpp"
#include "crawlbench/rng.hpp"

namespace crawlbench {

enum class Measure { degree, coreness, betweenness, eccentricity };

constexpr const char* measure_name(Measure m) {
  switch (m) {
    case Measure::degree: return "degree";
    case Measure::coreness: return "coreness";
    case Measure::betweenness: return "betweenness";
    case Measure::eccentricity: return "eccentricity";
  }
  return "?";
}
Measure parse_measure(std::string_view name);  // ConfigError on unknown names

// Smaller scores rank as more central only for eccentricity.
constexpr bool measure_minimizes(Measure m) {
  return m == Measure::eccentricity;
}

struct ScoreTable {
  Measure measure = Measure::degree;
  std::vector<double> scores;  // indexed by node id
};

ScoreTable degree_scores(const Graph& g);

// k-core numbers via degree-bucket peeling; linear in |V|+|E|.
ScoreTable coreness_scores(const Graph& g);

// Exact Brandes betweenness. Each unordered pair {s,t} contributes once.
ScoreTable betweenness_scores(const Graph& g);

// Pivot-sampled Brandes: accumulates from pivot_count distinct sources drawn
// without replacement and rescales by |V|/pivot_count, so pivot_count == |V|
// reproduces the exact scores. Pivots are processed in ascending id order to
// keep the accumulation deterministic. Requires 1 <= pivot_count <= |V|.
ScoreTable betweenness_approx(const Graph& g, NodeId pivot_count, Rng& rng);

// BFS from every node; errors on disconnected or empty input.
ScoreTable eccentricity_scores(const Graph& g);

struct TargetSet {
  Measure measure = Measure::degree;
  double fraction = 0.0;
  bool minimize = false;
  NodeId graph_node_count = 0;
  std::vector<NodeId> members;  // ascending node id
};

// Top ceil(p * |V|) nodes by score (bottom for eccentricity), ties broken by
// ascending node id. Requires 0 < p <= 1 and a nonempty table.
TargetSet build_target_set(const ScoreTable& table, double p);

// CSV rows "node_label,measure,score", one per node, with a header line.
// Scores are printed with enough digits to round-trip exactly.
void write_scores_csv(std::ostream& out, const Graph& g, const ScoreTable& table);
ScoreTable read_scores_csv(std::istream& in, Measure expected, NodeId node_count);

}  // namespace crawlbench
