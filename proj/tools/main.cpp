// crawlbench command line: run benchmark grids, verify dataset files,
// dump centrality scores, report target-set overlap.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crawlbench/errors.hpp"
#include "crawlbench/experiment.hpp"
#include "crawlbench/generators.hpp"

namespace cb = crawlbench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

cb::Graph load_graph_arg(const std::string& source) {
  cb::Graph g = cb::looks_like_generator_spec(source)
                    ? cb::make_from_spec(source)
                    : cb::load_edge_list(source);
  return cb::giant_component(g);
}

struct RunArgs {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

int cmd_run(const RunArgs& args) {
  cb::ExperimentConfig cfg;
  if (!args.config_path.empty())
    cfg = cb::load_config_file(args.config_path);
  for (const auto& [key, value] : args.overrides)
    cb::apply_config_entry(cfg, key, value);

  const auto result = cb::run_experiment(cfg);
  std::printf("graph %s: %u nodes, %zu edges\n", result.graph_name.c_str(),
              result.node_count, result.edge_count);
  for (const auto& path : result.files_written)
    std::printf("wrote %s\n", path.string().c_str());
  return kExitOk;
}

int cmd_verify(const std::string& data_dir,
               const std::vector<std::string>& names) {
  std::vector<const cb::DatasetEntry*> entries;
  if (names.empty()) {
    for (const auto& e : cb::dataset_registry()) entries.push_back(&e);
  } else {
    for (const auto& n : names) {
      const auto* e = cb::find_dataset(n);
      if (!e) throw cb::ConfigError("unknown dataset '" + n + "'");
      entries.push_back(e);
    }
  }

  bool all_ok = true;
  for (const auto* e : entries) {
    const auto report =
        cb::verify_dataset(*e, std::filesystem::path(data_dir) / e->filename);
    const char* status = !report.found   ? "missing"
                         : report.matched ? "ok"
                                          : "mismatch";
    std::printf("%-12s %-8s %s\n", e->name.c_str(), status,
                report.message.c_str());
    if (report.found && !report.matched) all_ok = false;
  }
  if (!all_ok)
    std::printf("note: count mismatches usually mean a different snapshot of "
                "the dataset; results stay valid, just not comparable\n");
  return kExitOk;
}

int cmd_centrality(const std::string& source,
                   const std::vector<std::string>& measure_names,
                   const std::string& output, bool exact, unsigned pivots,
                   std::uint64_t seed) {
  const cb::Graph g = load_graph_arg(source);
  std::vector<cb::ScoreTable> tables;
  for (const auto& name : measure_names) {
    const auto m = cb::parse_measure(name);
    tables.push_back(cb::compute_scores(g, m, exact,
                                        static_cast<cb::NodeId>(pivots),
                                        seed));
  }

  if (output.empty() || output == "-") {
    cb::write_centrality_csv(std::cout, g, tables);
  } else {
    std::ofstream out(output);
    if (!out) throw cb::DataError("cannot write " + output);
    cb::write_centrality_csv(out, g, tables);
    std::printf("wrote %s\n", output.c_str());
  }
  return kExitOk;
}

int cmd_overlap(const std::string& source,
                const std::vector<std::string>& measure_names, double p,
                const std::string& output, bool exact, unsigned pivots,
                std::uint64_t seed) {
  if (measure_names.size() < 2)
    throw cb::ConfigError("overlap needs at least two measures");
  const cb::Graph g = load_graph_arg(source);
  std::vector<cb::TargetSet> sets;
  for (const auto& name : measure_names) {
    const auto m = cb::parse_measure(name);
    const auto scores = cb::compute_scores(
        g, m, exact, static_cast<cb::NodeId>(pivots), seed);
    sets.push_back(cb::build_target_set(scores, p));
  }
  const std::string doc = cb::target_overlap_json(g, sets);

  if (output.empty() || output == "-") {
    std::printf("%s\n", doc.c_str());
  } else {
    std::ofstream out(output);
    if (!out) throw cb::DataError("cannot write " + output);
    out << doc << '\n';
    std::printf("wrote %s\n", output.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark online crawling strategies on undirected graphs"};
  app.require_subcommand(1);

  // run ----------------------------------------------------------------
  auto* run = app.add_subcommand(
      "run", "run a crawler x seed grid and write coverage curves");
  RunArgs run_args;
  run->add_option("-c,--config", run_args.config_path,
                  "flat key = value config file");
  std::optional<std::string> o_graph, o_name, o_crawlers, o_measures,
      o_sample_edges, o_betweenness, o_output, o_formats, o_p, o_seeds,
      o_master_seed, o_pivots, o_jobs;
  run->add_option("-g,--graph", o_graph,
                  "edge-list file or generator spec, e.g. pa(2000,8,42)");
  run->add_option("--name", o_name, "graph name used in outputs");
  run->add_option("--crawlers", o_crawlers,
                  "comma list from rc,rw,dfs,bfs,mod,de");
  run->add_option("--measures", o_measures,
                  "comma list from degree,coreness,betweenness,eccentricity");
  run->add_option("-p,--target-fraction", o_p, "target-set fraction (0,1]");
  run->add_option("-s,--seeds", o_seeds, "number of seed nodes");
  run->add_option("--master-seed", o_master_seed, "master rng seed");
  run->add_option("--sample-edges", o_sample_edges,
                  "closed-incident or induced");
  run->add_option("--betweenness", o_betweenness, "exact or approx");
  run->add_option("--pivots", o_pivots, "pivot count for approx betweenness");
  run->add_option("-o,--output-dir", o_output, "where outputs land");
  run->add_option("--formats", o_formats, "comma list from csv,json");
  run->add_option("-j,--jobs", o_jobs, "parallel crawl workers");
  bool emit_observed = false, no_cache = false;
  run->add_flag("--emit-observed", emit_observed,
                "also write observed-variant target rows to the CSV");
  run->add_flag("--no-cache", no_cache, "skip the centrality score cache");

  // verify -------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "check dataset files against the registry");
  std::string data_dir = "data";
  std::vector<std::string> verify_names;
  verify->add_option("-d,--data-dir", data_dir, "dataset directory");
  verify->add_option("names", verify_names,
                     "datasets to check (default: all)");

  // centrality ----------------------------------------------------------
  auto* centrality = app.add_subcommand(
      "centrality", "compute node scores and write them as CSV");
  std::string c_graph, c_output;
  std::vector<std::string> c_measures = {"degree", "coreness", "betweenness",
                                         "eccentricity"};
  bool c_approx = false;
  unsigned c_pivots = 256;
  std::uint64_t c_seed = 0;
  centrality->add_option("-g,--graph", c_graph, "edge-list file or spec")
      ->required();
  centrality->add_option("-m,--measures", c_measures, "measures to compute");
  centrality->add_option("-o,--output", c_output, "output file (default stdout)");
  centrality->add_flag("--approx", c_approx,
                       "pivot-sampled betweenness instead of exact");
  centrality->add_option("--pivots", c_pivots, "pivot count");
  centrality->add_option("--seed", c_seed, "rng seed for pivot sampling");

  // overlap --------------------------------------------------------------
  auto* overlap = app.add_subcommand(
      "overlap", "intersections between per-measure target sets");
  std::string v_graph, v_output;
  std::vector<std::string> v_measures = {"degree", "coreness", "betweenness",
                                         "eccentricity"};
  double v_p = 0.1;
  bool v_approx = false;
  unsigned v_pivots = 256;
  std::uint64_t v_seed = 0;
  overlap->add_option("-g,--graph", v_graph, "edge-list file or spec")
      ->required();
  overlap->add_option("-m,--measures", v_measures, "measures to intersect");
  overlap->add_option("-p,--target-fraction", v_p, "target-set fraction");
  overlap->add_option("-o,--output", v_output, "output file (default stdout)");
  overlap->add_flag("--approx", v_approx, "pivot-sampled betweenness");
  overlap->add_option("--pivots", v_pivots, "pivot count");
  overlap->add_option("--seed", v_seed, "rng seed for pivot sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) {
      auto push = [&](const char* key, const std::optional<std::string>& v) {
        if (v) run_args.overrides.emplace_back(key, *v);
      };
      push("graph", o_graph);
      push("name", o_name);
      push("crawlers", o_crawlers);
      push("measures", o_measures);
      push("p", o_p);
      push("seeds", o_seeds);
      push("master-seed", o_master_seed);
      push("sample-edges", o_sample_edges);
      push("betweenness", o_betweenness);
      push("pivots", o_pivots);
      push("output-dir", o_output);
      push("formats", o_formats);
      push("jobs", o_jobs);
      if (emit_observed) run_args.overrides.emplace_back("emit-observed", "true");
      if (no_cache) run_args.overrides.emplace_back("cache", "false");
      return cmd_run(run_args);
    }
    if (verify->parsed()) return cmd_verify(data_dir, verify_names);
    if (centrality->parsed())
      return cmd_centrality(c_graph, c_measures, c_output, !c_approx,
                            c_pivots, c_seed);
    if (overlap->parsed())
      return cmd_overlap(v_graph, v_measures, v_p, v_output, !v_approx,
                         v_pivots, v_seed);
  } catch (const cb::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const cb::DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
