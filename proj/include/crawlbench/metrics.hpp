#pragma once

// Coverage curves and their aggregates. A curve has one value per query,
// value i (1-based) being the metric right after the i-th query, so a full
// crawl on n nodes yields a length-n non-decreasing curve ending at 1.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crawlbench/centrality.hpp"
#include "crawlbench/crawl.hpp"

namespace crawlbench {

enum class MetricKind { node_coverage, target_observed, target_closed };

constexpr const char* metric_name(MetricKind k) {
  switch (k) {
    case MetricKind::node_coverage: return "nodes";
    case MetricKind::target_observed: return "target_observed";
    case MetricKind::target_closed: return "target_closed";
  }
  return "?";
}

struct CoverageCurve {
  MetricKind kind = MetricKind::node_coverage;
  std::optional<Measure> measure;  // engaged for the target metrics
  std::vector<double> values;
};

// |seen nodes| / |V| after each query.
CoverageCurve node_coverage(const RunTrace& run);

// Fraction of the target set seen (target_observed) or already queried
// (target_closed) after each query. Errors when the target set was built on
// a different graph size.
CoverageCurve target_coverage(const RunTrace& run, const TargetSet& target,
                              MetricKind variant);

// Pointwise mean; all curves must have the same length.
CoverageCurve average_curves(const std::vector<CoverageCurve>& curves);

// Mean of the curve values. Linear, so auc(average) == average of aucs.
double auc(const CoverageCurve& curve);

// Per-method pointwise difference to the best method at each step; all
// entries <= 0 and the pointwise winner sits at 0. Needs at least two
// methods with equal-length curves.
std::map<std::string, CoverageCurve> gap_to_best(
    const std::map<std::string, CoverageCurve>& by_method);

// graph -> crawler -> measure-key -> auc
using AucTable =
    std::map<std::string, std::map<std::string, std::map<std::string, double>>>;

// Counts, per measure, how many graphs each crawler wins on AUC. Every graph
// must carry the same crawler and measure keys; ties hand every tied leader
// a point.
std::map<std::string, std::map<std::string, int>> winner_tally(
    const AucTable& table);

}  // namespace crawlbench
