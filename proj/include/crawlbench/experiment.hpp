#pragma once

// The benchmark driver: config file -> crawls -> curves on disk. Everything an
// experiment produces is a pure function of (config, master seed).

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "crawlbench/centrality.hpp"
#include "crawlbench/crawl.hpp"
#include "crawlbench/metrics.hpp"

namespace crawlbench {

struct ExperimentConfig {
  // File path or generator spec such as "barbell(20,20)" or "pa(2000,8,42)".
  std::string graph;
  // Name used in output rows; defaults to the file stem or the spec text.
  std::string name;

  std::vector<StrategyKind> crawlers = {StrategyKind::rc,  StrategyKind::rw,
                                        StrategyKind::dfs, StrategyKind::bfs,
                                        StrategyKind::mod, StrategyKind::de};
  std::vector<Measure> measures = {Measure::degree, Measure::coreness,
                                   Measure::betweenness, Measure::eccentricity};
  double target_fraction = 0.1;
  int seed_count = 8;
  std::uint64_t master_seed = 0;

  SampleEdgePolicy sample_edges = SampleEdgePolicy::closed_incident;
  bool betweenness_exact = true;
  NodeId betweenness_pivots = 256;  // clamped to |V| at run time
  DeConfig de;
  std::uint64_t rw_hop_cap = 100'000'000;

  std::filesystem::path output_dir = ".";
  std::set<std::string> formats = {"csv", "json"};
  bool emit_observed = false;  // add target_observed rows to the CSV
  bool use_cache = true;       // cache centrality scores next to graph files
  int jobs = 1;
};

// Flat "key = value" file, '#' comments. Unknown keys and bad values raise
// ConfigError. apply_config_entry is shared with the CLI flag overrides.
ExperimentConfig load_config_file(const std::string& path);
void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value);
void validate_config(const ExperimentConfig& cfg);

struct ExperimentResult {
  std::string graph_name;
  NodeId node_count = 0;
  std::size_t edge_count = 0;
  AucTable auc;  // keyed by graph name -> crawler -> measure key
  std::map<std::string, std::map<std::string, int>> winners;
  std::vector<std::filesystem::path> files_written;
};

// Runs the full grid (crawler x seed), averages across seeds and writes
// curves.csv / summary.json / winners.json / overlap.json into output_dir
// (subject to the formats set). Deterministic byte-for-byte given the same
// config.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// ---- dataset registry ----------------------------------------------------

struct DatasetEntry {
  std::string name;
  std::string filename;      // expected location under the data directory
  NodeId expected_nodes;     // giant component
  std::size_t expected_edges;
  std::string description;   // flavor + where to obtain the file
};

// The six benchmark graphs with their expected giant-component sizes.
const std::vector<DatasetEntry>& dataset_registry();
const DatasetEntry* find_dataset(std::string_view name);

struct VerifyReport {
  std::string name;
  bool found = false;
  bool matched = false;
  NodeId actual_nodes = 0;
  std::size_t actual_edges = 0;
  std::string message;
};

// Loads the file, extracts the giant component and compares the counts
// against the registry. A mismatch is reported, not fatal (datasets drift
// between snapshots); an unreadable file raises DataError.
VerifyReport verify_dataset(const DatasetEntry& entry,
                            const std::filesystem::path& path);

// ---- standalone products -------------------------------------------------

// Per-measure score dump for one graph (CSV, same schema as the cache files).
void write_centrality_csv(std::ostream& out, const Graph& g,
                          const std::vector<ScoreTable>& tables);

// JSON report of pairwise (and the overall) intersections between the target
// sets of the given measures at fraction p. Needs at least two sets over the
// same graph.
std::string target_overlap_json(const Graph& g,
                                const std::vector<TargetSet>& sets);

// Content-addressed score computation: memoizes expensive measures in
// "<graph file>.<measure>.<hash>.scores.csv" next to the graph file when
// cache_path is nonempty. rng_seed feeds pivot sampling for approximate
// betweenness only.
ScoreTable compute_scores(const Graph& g, Measure m, bool betweenness_exact,
                          NodeId betweenness_pivots, std::uint64_t rng_seed,
                          const std::filesystem::path& cache_source = {},
                          bool use_cache = false);

}  // namespace crawlbench
