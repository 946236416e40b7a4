// Python bindings for the main operations: graph I/O and generators,
// centrality scores and target sets, crawls, coverage curves.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "crawlbench/centrality.hpp"
#include "crawlbench/crawl.hpp"
#include "crawlbench/errors.hpp"
#include "crawlbench/experiment.hpp"
#include "crawlbench/generators.hpp"
#include "crawlbench/graph.hpp"
#include "crawlbench/metrics.hpp"

namespace py = pybind11;
namespace cb = crawlbench;

namespace {

cb::Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return cb::parse_edge_list(in);
}

std::string graph_to_text(const cb::Graph& g) {
  std::ostringstream out;
  cb::serialize_edge_list(g, out);
  return out.str();
}

std::vector<cb::NodeId> neighbors_list(const cb::Graph& g, cb::NodeId v) {
  const auto span = g.neighbors(v);
  return {span.begin(), span.end()};
}

cb::CoverageCurve curve_from_values(const std::string& metric,
                                    std::vector<double> values) {
  cb::CoverageCurve c;
  if (metric == "nodes")
    c.kind = cb::MetricKind::node_coverage;
  else if (metric == "target_observed")
    c.kind = cb::MetricKind::target_observed;
  else if (metric == "target_closed")
    c.kind = cb::MetricKind::target_closed;
  else
    throw std::invalid_argument("unknown metric '" + metric + "'");
  c.values = std::move(values);
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "crawling-strategy benchmark core";

  py::register_exception<cb::ConfigError>(m, "ConfigError");
  py::register_exception<cb::DataError>(m, "DataError");

  py::class_<cb::Graph>(m, "Graph")
      .def_property_readonly("node_count", &cb::Graph::node_count)
      .def_property_readonly("edge_count", &cb::Graph::edge_count)
      .def("degree", &cb::Graph::degree, py::arg("v"))
      .def("neighbors", &neighbors_list, py::arg("v"))
      .def("has_edge", &cb::Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("label", &cb::Graph::label, py::arg("v"))
      .def("__repr__", [](const cb::Graph& g) {
        return "<Graph nodes=" + std::to_string(g.node_count()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("load_edge_list", &cb::load_edge_list, py::arg("path"));
  m.def("parse_edge_list", &graph_from_text, py::arg("text"));
  m.def("serialize_edge_list", &graph_to_text, py::arg("graph"));
  m.def("giant_component", &cb::giant_component, py::arg("graph"));
  m.def("is_connected", &cb::is_connected, py::arg("graph"));
  m.def("local_clustering", &cb::local_clustering, py::arg("graph"),
        py::arg("v"));

  m.def("generate", &cb::make_from_spec, py::arg("spec"),
        "build a graph from a spec such as 'barbell(5,5)' or 'pa(2000,8,42)'");

  py::class_<cb::ScoreTable>(m, "ScoreTable")
      .def_property_readonly(
          "measure",
          [](const cb::ScoreTable& t) {
            return std::string(cb::measure_name(t.measure));
          })
      .def_readonly("scores", &cb::ScoreTable::scores);

  m.def("centrality_scores",
        [](const cb::Graph& g, const std::string& measure) {
          const auto m_ = cb::parse_measure(measure);
          return cb::compute_scores(g, m_, true, 0, 0);
        },
        py::arg("graph"), py::arg("measure"),
        "exact scores for degree/coreness/betweenness/eccentricity");
  m.def("betweenness_approx",
        [](const cb::Graph& g, cb::NodeId pivots, std::uint64_t seed) {
          cb::Rng rng(seed);
          return cb::betweenness_approx(g, pivots, rng);
        },
        py::arg("graph"), py::arg("pivots"), py::arg("seed") = 0);

  py::class_<cb::TargetSet>(m, "TargetSet")
      .def_property_readonly(
          "measure",
          [](const cb::TargetSet& t) {
            return std::string(cb::measure_name(t.measure));
          })
      .def_readonly("fraction", &cb::TargetSet::fraction)
      .def_readonly("minimize", &cb::TargetSet::minimize)
      .def_readonly("members", &cb::TargetSet::members);

  m.def("build_target_set", &cb::build_target_set, py::arg("scores"),
        py::arg("p"));

  py::class_<cb::RunTrace>(m, "RunTrace")
      .def_readonly("node_count", &cb::RunTrace::node_count)
      .def_readonly("seed", &cb::RunTrace::seed)
      .def_readonly("rng_seed", &cb::RunTrace::rng_seed)
      .def_property_readonly(
          "kind",
          [](const cb::RunTrace& r) {
            return std::string(cb::strategy_name(r.kind));
          })
      .def_readonly("trace", &cb::RunTrace::trace)
      .def_readonly("observed_at", &cb::RunTrace::observed_at);

  m.def("run_crawl",
        [](const cb::Graph& g, const std::string& kind, cb::NodeId seed,
           std::uint64_t rng_seed, const std::string& sample_edges) {
          cb::CrawlOptions options;
          if (sample_edges == "induced")
            options.sample_edges = cb::SampleEdgePolicy::induced;
          else if (sample_edges != "closed-incident")
            throw std::invalid_argument("sample_edges must be "
                                        "'closed-incident' or 'induced'");
          return cb::run_crawl(g, cb::parse_strategy(kind), seed, rng_seed,
                               options);
        },
        py::arg("graph"), py::arg("kind"), py::arg("seed"),
        py::arg("rng_seed") = 0,
        py::arg("sample_edges") = "closed-incident");

  py::class_<cb::CoverageCurve>(m, "CoverageCurve")
      .def_property_readonly(
          "metric",
          [](const cb::CoverageCurve& c) {
            return std::string(cb::metric_name(c.kind));
          })
      .def_property_readonly(
          "measure",
          [](const cb::CoverageCurve& c) -> py::object {
            if (!c.measure) return py::none();
            return py::str(cb::measure_name(*c.measure));
          })
      .def_readonly("values", &cb::CoverageCurve::values);

  m.def("node_coverage", &cb::node_coverage, py::arg("run"));
  m.def("target_coverage",
        [](const cb::RunTrace& run, const cb::TargetSet& ts,
           const std::string& variant) {
          if (variant == "closed")
            return cb::target_coverage(run, ts, cb::MetricKind::target_closed);
          if (variant == "observed")
            return cb::target_coverage(run, ts,
                                       cb::MetricKind::target_observed);
          throw std::invalid_argument(
              "variant must be 'closed' or 'observed'");
        },
        py::arg("run"), py::arg("target"), py::arg("variant") = "closed");
  m.def("average_curves", &cb::average_curves, py::arg("curves"));
  m.def("auc", &cb::auc, py::arg("curve"));
  m.def("curve", &curve_from_values, py::arg("metric"), py::arg("values"),
        "wrap plain values for average_curves/auc");
  m.def("gap_to_best", &cb::gap_to_best, py::arg("curves_by_method"));
  m.def("winner_tally", &cb::winner_tally, py::arg("auc_table"));

  m.def("run_experiment_file",
        [](const std::string& config_path) {
          const auto cfg = cb::load_config_file(config_path);
          const auto result = cb::run_experiment(cfg);
          py::dict out;
          out["graph"] = result.graph_name;
          out["nodes"] = result.node_count;
          out["edges"] = result.edge_count;
          out["auc"] = result.auc;
          std::vector<std::string> files;
          for (const auto& p : result.files_written)
            files.push_back(p.string());
          out["files"] = files;
          return out;
        },
        py::arg("config_path"),
        "load a config file, run the grid, return the auc table");

  m.attr("__version__") = "0.1.0";
}
