#include "crawlbench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "crawlbench/errors.hpp"
#include "crawlbench/generators.hpp"
#include "json.hpp"

namespace crawlbench {

namespace {

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("bad boolean for '" + key + "': '" + v + "'");
}

long long parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for '" + key + "': '" + v + "'");
  }
}

double parse_real(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad number for '" + key + "': '" + v + "'");
  }
}

// shorter form for curve values; 12 significant digits is far below the
// metric resolution (multiples of 1/|V*|) yet keeps the files readable
std::string format_curve_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "graph") {
    cfg.graph = value;
  } else if (key == "name") {
    cfg.name = value;
  } else if (key == "crawlers") {
    cfg.crawlers.clear();
    for (const auto& item : split_list(value))
      cfg.crawlers.push_back(parse_strategy(item));
  } else if (key == "measures") {
    cfg.measures.clear();
    for (const auto& item : split_list(value))
      cfg.measures.push_back(parse_measure(item));
  } else if (key == "p" || key == "target-fraction") {
    cfg.target_fraction = parse_real(value, key);
  } else if (key == "seeds" || key == "seed-count") {
    cfg.seed_count = static_cast<int>(parse_int(value, key));
  } else if (key == "master-seed") {
    cfg.master_seed = static_cast<std::uint64_t>(parse_int(value, key));
  } else if (key == "sample-edges") {
    if (value == "closed-incident")
      cfg.sample_edges = SampleEdgePolicy::closed_incident;
    else if (value == "induced")
      cfg.sample_edges = SampleEdgePolicy::induced;
    else
      throw ConfigError("bad sample-edges value '" + value +
                        "' (closed-incident or induced)");
  } else if (key == "betweenness") {
    if (value == "exact")
      cfg.betweenness_exact = true;
    else if (value == "approx")
      cfg.betweenness_exact = false;
    else
      throw ConfigError("bad betweenness value '" + value +
                        "' (exact or approx)");
  } else if (key == "pivots") {
    cfg.betweenness_pivots = static_cast<NodeId>(parse_int(value, key));
  } else if (key == "output-dir") {
    cfg.output_dir = value;
  } else if (key == "formats") {
    cfg.formats.clear();
    for (const auto& item : split_list(value)) {
      if (item != "csv" && item != "json")
        throw ConfigError("unknown output format '" + item + "'");
      cfg.formats.insert(item);
    }
  } else if (key == "emit-observed") {
    cfg.emit_observed = parse_bool(value, key);
  } else if (key == "cache") {
    cfg.use_cache = parse_bool(value, key);
  } else if (key == "jobs") {
    cfg.jobs = static_cast<int>(parse_int(value, key));
  } else if (key == "de-top-fraction") {
    cfg.de.top_fraction = parse_real(value, key);
  } else if (key == "de-decay") {
    cfg.de.decay = parse_real(value, key);
  } else if (key == "de-min-burst") {
    cfg.de.min_burst = static_cast<int>(parse_int(value, key));
  } else if (key == "de-switch-ratio") {
    cfg.de.switch_ratio = parse_real(value, key);
  } else if (key == "rw-hop-cap") {
    cfg.rw_hop_cap = static_cast<std::uint64_t>(parse_int(value, key));
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);

  ExperimentConfig cfg;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    apply_config_entry(cfg, trim(line.substr(0, eq)),
                       trim(line.substr(eq + 1)));
  }
  return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.graph.empty()) throw ConfigError("no graph given");
  if (cfg.crawlers.empty()) throw ConfigError("no crawlers selected");
  if (cfg.measures.empty()) throw ConfigError("no measures selected");
  if (!(cfg.target_fraction > 0.0 && cfg.target_fraction <= 1.0))
    throw ConfigError("target fraction must be in (0, 1]");
  if (cfg.seed_count < 1) throw ConfigError("seed count must be >= 1");
  if (cfg.betweenness_pivots < 1)
    throw ConfigError("pivot count must be >= 1");
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (cfg.formats.empty()) throw ConfigError("no output formats selected");
  if (!(cfg.de.top_fraction > 0.0 && cfg.de.top_fraction < 1.0))
    throw ConfigError("de-top-fraction must be in (0, 1)");
  if (!(cfg.de.decay > 0.0 && cfg.de.decay <= 1.0))
    throw ConfigError("de-decay must be in (0, 1]");
  if (cfg.de.min_burst < 1) throw ConfigError("de-min-burst must be >= 1");
  if (cfg.de.switch_ratio <= 0.0)
    throw ConfigError("de-switch-ratio must be > 0");
  std::set<StrategyKind> seen_crawlers(cfg.crawlers.begin(),
                                       cfg.crawlers.end());
  if (seen_crawlers.size() != cfg.crawlers.size())
    throw ConfigError("duplicate crawler in list");
  std::set<Measure> seen_measures(cfg.measures.begin(), cfg.measures.end());
  if (seen_measures.size() != cfg.measures.size())
    throw ConfigError("duplicate measure in list");
}

// ---- dataset registry ------------------------------------------------------

const std::vector<DatasetEntry>& dataset_registry() {
  // giant-component sizes of the snapshots the benchmark numbers refer to;
  // files are not shipped, the description says where to fetch them
  static const std::vector<DatasetEntry> entries = {
      {"hamsterster", "hamsterster.edges", 2000, 16097,
       "friendships on hamsterster.com; mirrored at konect.cc and "
       "networkrepository.com (soc-hamsterster)"},
      {"dcam", "dcam.edges", 2752, 68741,
       "co-authorship snapshot (DCAM); networkrepository.com"},
      {"facebook", "facebook.edges", 63392, 816886,
       "facebook friendship sample (New Orleans region); konect.cc "
       "(facebook-wosn-links)"},
      {"slashdot", "slashdot.edges", 51083, 131175,
       "slashdot reply network; konect.cc (slashdot-threads)"},
      {"github", "github.edges", 120865, 439858,
       "github developer follow graph; networkrepository.com (soc-github)"},
      {"dblp2010", "dblp2010.edges", 226413, 716460,
       "dblp co-authorship snapshot (2010); networkrepository.com "
       "(ca-dblp-2010)"},
  };
  return entries;
}

const DatasetEntry* find_dataset(std::string_view name) {
  for (const auto& e : dataset_registry())
    if (e.name == name) return &e;
  return nullptr;
}

VerifyReport verify_dataset(const DatasetEntry& entry,
                            const std::filesystem::path& path) {
  VerifyReport report;
  report.name = entry.name;
  if (!std::filesystem::exists(path)) {
    report.message = "file not found: " + path.string();
    return report;
  }
  report.found = true;
  const Graph g = giant_component(load_edge_list(path.string()));
  report.actual_nodes = g.node_count();
  report.actual_edges = g.edge_count();
  report.matched = g.node_count() == entry.expected_nodes &&
                   g.edge_count() == entry.expected_edges;
  if (report.matched) {
    report.message = "ok";
  } else {
    report.message = "giant component is " + std::to_string(g.node_count()) +
                     " nodes / " + std::to_string(g.edge_count()) +
                     " edges, expected " + std::to_string(entry.expected_nodes) +
                     " / " + std::to_string(entry.expected_edges) +
                     " (snapshot drift?)";
  }
  return report;
}

// ---- scores and caching ----------------------------------------------------

namespace {

std::uint64_t file_content_hash(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0)
    h = fnv1a64_bytes(buf, static_cast<std::size_t>(in.gcount()), h);
  return h;
}

ScoreTable compute_scores_direct(const Graph& g, Measure m,
                                 bool betweenness_exact,
                                 NodeId betweenness_pivots,
                                 std::uint64_t rng_seed) {
  switch (m) {
    case Measure::degree: return degree_scores(g);
    case Measure::coreness: return coreness_scores(g);
    case Measure::betweenness: {
      const NodeId pivots = std::min<NodeId>(
          std::max<NodeId>(betweenness_pivots, 1), g.node_count());
      if (betweenness_exact || pivots >= g.node_count())
        return betweenness_scores(g);
      Rng rng(rng_seed);
      return betweenness_approx(g, pivots, rng);
    }
    case Measure::eccentricity: return eccentricity_scores(g);
  }
  throw std::logic_error("unreachable measure");
}

}  // namespace

ScoreTable compute_scores(const Graph& g, Measure m, bool betweenness_exact,
                          NodeId betweenness_pivots, std::uint64_t rng_seed,
                          const std::filesystem::path& cache_source,
                          bool use_cache) {
  if (!use_cache || cache_source.empty())
    return compute_scores_direct(g, m, betweenness_exact, betweenness_pivots,
                                 rng_seed);

  // key on file content plus everything that shapes the scores
  std::uint64_t key = file_content_hash(cache_source);
  key = fnv1a64(measure_name(m), key);
  if (m == Measure::betweenness && !betweenness_exact) {
    key = fnv1a64_bytes(&betweenness_pivots, sizeof betweenness_pivots, key);
    key = fnv1a64_bytes(&rng_seed, sizeof rng_seed, key);
  }
  char hex[20];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(key));

  std::filesystem::path cache = cache_source;
  cache += std::string(".") + measure_name(m) + "." + hex + ".scores.csv";

  if (std::filesystem::exists(cache)) {
    std::ifstream in(cache);
    if (in) {
      try {
        return read_scores_csv(in, m, g.node_count());
      } catch (const DataError&) {
        // stale or truncated cache file; fall through and recompute
      }
    }
  }

  ScoreTable t = compute_scores_direct(g, m, betweenness_exact,
                                       betweenness_pivots, rng_seed);
  std::ofstream out(cache);
  if (out) {
    write_scores_csv(out, g, t);
  } else {
    std::fprintf(stderr, "note: cannot write score cache %s\n",
                 cache.string().c_str());
  }
  return t;
}

// ---- products --------------------------------------------------------------

void write_centrality_csv(std::ostream& out, const Graph& g,
                          const std::vector<ScoreTable>& tables) {
  out << "node_label,measure,score\n";
  char buf[40];
  for (const auto& t : tables) {
    if (t.scores.size() != g.node_count())
      throw std::invalid_argument("score table does not match graph");
    for (NodeId v = 0; v < g.node_count(); ++v) {
      std::snprintf(buf, sizeof buf, "%.17g", t.scores[v]);
      out << g.label(v) << ',' << measure_name(t.measure) << ',' << buf
          << '\n';
    }
  }
}

std::string target_overlap_json(const Graph& g,
                                const std::vector<TargetSet>& sets) {
  if (sets.size() < 2)
    throw std::invalid_argument("overlap needs at least two target sets");
  for (const auto& s : sets)
    if (s.graph_node_count != g.node_count())
      throw std::invalid_argument(
          "target sets come from different graphs");

  nlohmann::ordered_json doc;
  doc["nodes"] = g.node_count();
  for (const auto& s : sets)
    doc["set_sizes"][measure_name(s.measure)] = s.members.size();

  auto intersection_size = [](const std::vector<NodeId>& a,
                              const std::vector<NodeId>& b) {
    std::vector<NodeId> tmp;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(tmp));
    return tmp.size();
  };

  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const std::string key = std::string(measure_name(sets[i].measure)) +
                              "&" + measure_name(sets[j].measure);
      const auto common = intersection_size(sets[i].members, sets[j].members);
      doc["pairwise"][key]["common"] = common;
      doc["pairwise"][key]["jaccard"] =
          static_cast<double>(common) /
          static_cast<double>(sets[i].members.size() +
                              sets[j].members.size() - common);
    }

  std::vector<NodeId> all = sets.front().members;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    std::vector<NodeId> tmp;
    std::set_intersection(all.begin(), all.end(), sets[i].members.begin(),
                          sets[i].members.end(), std::back_inserter(tmp));
    all = std::move(tmp);
  }
  doc["common_to_all"] = all.size();
  return doc.dump(2);
}

// ---- the run grid ----------------------------------------------------------

namespace {

struct RunProduct {
  // one crawl's curves in emit order: nodes, then per measure closed
  // (followed by observed when enabled)
  std::vector<CoverageCurve> curves;
};

std::string default_name(const std::string& source) {
  if (looks_like_generator_spec(source)) return source;
  return std::filesystem::path(source).stem().string();
}

std::vector<NodeId> draw_seed_nodes(NodeId n, int count, Rng& rng) {
  // partial Fisher-Yates, without replacement
  std::vector<NodeId> pool(n);
  for (NodeId i = 0; i < n; ++i) pool[i] = i;
  std::vector<NodeId> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto j =
        static_cast<std::size_t>(i) +
        rng.uniform_index(n - static_cast<std::size_t>(i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    out.push_back(pool[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);

  const bool generated = looks_like_generator_spec(cfg.graph);
  Graph g = generated ? make_from_spec(cfg.graph)
                      : load_edge_list(cfg.graph);
  // crawls need one component; for files this also drops the isolated husk
  // around the giant component, for generators it is the identity
  g = giant_component(g);

  const std::string name =
      cfg.name.empty() ? default_name(cfg.graph) : cfg.name;
  if (cfg.seed_count > static_cast<long long>(g.node_count()))
    throw ConfigError("more seeds than nodes");

  // targets
  std::vector<TargetSet> targets;
  targets.reserve(cfg.measures.size());
  const std::filesystem::path cache_source =
      generated || !cfg.use_cache ? std::filesystem::path{} :
                                    std::filesystem::path(cfg.graph);
  for (const Measure m : cfg.measures) {
    const auto scores = compute_scores(
        g, m, cfg.betweenness_exact, cfg.betweenness_pivots,
        derive_seed(cfg.master_seed, name, "betweenness-pivots", 0),
        cache_source, cfg.use_cache);
    targets.push_back(build_target_set(scores, cfg.target_fraction));
  }

  // shared seed nodes, one list for every crawler
  Rng master(cfg.master_seed);
  const auto seed_nodes = draw_seed_nodes(g.node_count(), cfg.seed_count, master);

  CrawlOptions options;
  options.sample_edges = cfg.sample_edges;
  options.de = cfg.de;
  options.rw_hop_cap = cfg.rw_hop_cap;

  const std::size_t runs_total =
      cfg.crawlers.size() * static_cast<std::size_t>(cfg.seed_count);
  std::vector<RunProduct> products(runs_total);

  auto run_one = [&](std::size_t flat) {
    const std::size_t ci = flat / static_cast<std::size_t>(cfg.seed_count);
    const std::size_t si = flat % static_cast<std::size_t>(cfg.seed_count);
    const StrategyKind kind = cfg.crawlers[ci];
    const std::uint64_t rng_seed =
        derive_seed(cfg.master_seed, name, strategy_name(kind), si);
    const RunTrace run =
        run_crawl(g, kind, seed_nodes[si], rng_seed, options);

    RunProduct& p = products[flat];
    p.curves.push_back(node_coverage(run));
    for (const auto& ts : targets) {
      p.curves.push_back(target_coverage(run, ts, MetricKind::target_closed));
      if (cfg.emit_observed)
        p.curves.push_back(
            target_coverage(run, ts, MetricKind::target_observed));
    }
    if (!cfg.emit_observed)
      for (const auto& ts : targets)
        p.curves.push_back(
            target_coverage(run, ts, MetricKind::target_observed));
  };

  if (cfg.jobs <= 1 || runs_total <= 1) {
    for (std::size_t i = 0; i < runs_total; ++i) run_one(i);
  } else {
    // a simple shared-counter pool; products are indexed, so the output is
    // independent of scheduling
    std::atomic<std::size_t> next{0};
    const int workers =
        std::min<int>(cfg.jobs, static_cast<int>(runs_total));
    std::vector<std::future<void>> futures;
    futures.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      futures.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= runs_total) return;
          run_one(i);
        }
      }));
    for (auto& f : futures) f.get();  // propagates the first exception
  }

  // emit
  std::filesystem::create_directories(cfg.output_dir);
  ExperimentResult result;
  result.graph_name = name;
  result.node_count = g.node_count();
  result.edge_count = g.edge_count();

  const std::size_t emitted_per_run =
      1 + cfg.measures.size() * (cfg.emit_observed ? 2u : 1u);

  if (cfg.formats.count("csv")) {
    const auto path = cfg.output_dir / "curves.csv";
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << "graph,crawler,seed,metric,measure,iteration,value\n";
    for (std::size_t ci = 0; ci < cfg.crawlers.size(); ++ci) {
      const char* crawler = strategy_name(cfg.crawlers[ci]);
      for (int si = 0; si < cfg.seed_count; ++si) {
        const auto& p =
            products[ci * static_cast<std::size_t>(cfg.seed_count) +
                     static_cast<std::size_t>(si)];
        const std::string seed_label = g.label(seed_nodes[si]);
        for (std::size_t k = 0; k < emitted_per_run; ++k) {
          const auto& curve = p.curves[k];
          const char* metric = metric_name(curve.kind);
          const char* measure =
              curve.measure ? measure_name(*curve.measure) : "";
          for (std::size_t i = 0; i < curve.values.size(); ++i)
            out << name << ',' << crawler << ',' << seed_label << ','
                << metric << ',' << measure << ',' << i + 1 << ','
                << format_curve_value(curve.values[i]) << '\n';
        }
      }
    }
    result.files_written.push_back(path);
  }

  // seed-averaged curves per crawler, then aucs
  for (std::size_t ci = 0; ci < cfg.crawlers.size(); ++ci) {
    const std::string crawler = strategy_name(cfg.crawlers[ci]);
    const std::size_t base = ci * static_cast<std::size_t>(cfg.seed_count);

    const std::size_t per_run = products[base].curves.size();
    for (std::size_t k = 0; k < per_run; ++k) {
      std::vector<CoverageCurve> same;
      same.reserve(static_cast<std::size_t>(cfg.seed_count));
      for (int si = 0; si < cfg.seed_count; ++si)
        same.push_back(
            products[base + static_cast<std::size_t>(si)].curves[k]);
      const CoverageCurve avg = average_curves(same);

      std::string key;
      if (avg.kind == MetricKind::node_coverage)
        key = "nodes";
      else if (avg.kind == MetricKind::target_closed)
        key = measure_name(*avg.measure);
      else
        key = std::string(measure_name(*avg.measure)) + "_observed";
      result.auc[name][crawler][key] = auc(avg);
    }
  }

  // winner tally over the closed-variant measures plus node coverage
  AucTable tally_input;
  for (const auto& graph_entry : result.auc)
    for (const auto& crawler_entry : graph_entry.second)
      for (const auto& m : crawler_entry.second)
        if (m.first.find("_observed") == std::string::npos)
          tally_input[graph_entry.first][crawler_entry.first][m.first] =
              m.second;
  result.winners = winner_tally(tally_input);

  if (cfg.formats.count("json")) {
    nlohmann::ordered_json summary;
    summary["graph"] = name;
    summary["nodes"] = g.node_count();
    summary["edges"] = g.edge_count();
    summary["p"] = cfg.target_fraction;
    summary["seeds"] = cfg.seed_count;
    summary["master_seed"] = cfg.master_seed;
    for (std::size_t ci = 0; ci < cfg.crawlers.size(); ++ci) {
      const std::string crawler = strategy_name(cfg.crawlers[ci]);
      const std::size_t base = ci * static_cast<std::size_t>(cfg.seed_count);
      const std::size_t per_run = products[base].curves.size();
      for (std::size_t k = 0; k < per_run; ++k) {
        std::vector<CoverageCurve> same;
        for (int si = 0; si < cfg.seed_count; ++si)
          same.push_back(
              products[base + static_cast<std::size_t>(si)].curves[k]);
        const CoverageCurve avg = average_curves(same);
        std::string key;
        if (avg.kind == MetricKind::node_coverage)
          key = "nodes";
        else if (avg.kind == MetricKind::target_closed)
          key = measure_name(*avg.measure);
        else
          key = std::string(measure_name(*avg.measure)) + "_observed";
        summary["results"][name][crawler][key] = {
            {"auc", auc(avg)}, {"final_value", avg.values.back()}};
      }
    }
    const auto spath = cfg.output_dir / "summary.json";
    std::ofstream sout(spath);
    if (!sout) throw DataError("cannot write " + spath.string());
    sout << summary.dump(2) << '\n';
    result.files_written.push_back(spath);

    nlohmann::ordered_json winners;
    for (const auto& measure_entry : result.winners)
      for (const auto& crawler_entry : measure_entry.second)
        winners[measure_entry.first][crawler_entry.first] =
            crawler_entry.second;
    const auto wpath = cfg.output_dir / "winners.json";
    std::ofstream wout(wpath);
    if (!wout) throw DataError("cannot write " + wpath.string());
    wout << winners.dump(2) << '\n';
    result.files_written.push_back(wpath);

    if (targets.size() >= 2) {
      const auto opath = cfg.output_dir / "overlap.json";
      std::ofstream oout(opath);
      if (!oout) throw DataError("cannot write " + opath.string());
      oout << target_overlap_json(g, targets) << '\n';
      result.files_written.push_back(opath);
    }
  }

  return result;
}

}  // namespace crawlbench
