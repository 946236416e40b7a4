#include "crawlbench/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace crawlbench {

CoverageCurve node_coverage(const RunTrace& run) {
  const std::size_t steps = run.trace.size();
  const double n = static_cast<double>(run.node_count);

  // how many nodes became observed at each query index
  std::vector<std::size_t> entered(steps + 1, 0);
  for (const std::uint32_t at : run.observed_at)
    if (at <= steps) ++entered[at];

  CoverageCurve curve{MetricKind::node_coverage, std::nullopt, {}};
  curve.values.reserve(steps);
  std::size_t seen = entered[0];  // the seed
  for (std::size_t i = 1; i <= steps; ++i) {
    seen += entered[i];
    curve.values.push_back(static_cast<double>(seen) / n);
  }
  return curve;
}

CoverageCurve target_coverage(const RunTrace& run, const TargetSet& target,
                              MetricKind variant) {
  if (variant != MetricKind::target_observed &&
      variant != MetricKind::target_closed)
    throw std::invalid_argument("target_coverage expects a target metric");
  if (target.graph_node_count != run.node_count)
    throw std::invalid_argument(
        "target set and run come from different graphs");
  if (target.members.empty())
    throw std::invalid_argument("empty target set");

  const std::size_t steps = run.trace.size();
  const double size = static_cast<double>(target.members.size());
  std::vector<std::uint8_t> is_member(run.node_count, 0);
  for (NodeId v : target.members) is_member[v] = 1;

  std::vector<std::size_t> hits(steps + 1, 0);
  std::size_t at_start = 0;
  if (variant == MetricKind::target_closed) {
    for (std::size_t i = 0; i < steps; ++i)
      if (is_member[run.trace[i]]) ++hits[i + 1];
  } else {
    for (NodeId v : target.members) {
      const std::uint32_t at = run.observed_at[v];
      if (at == 0)
        ++at_start;  // the seed itself
      else if (at <= steps)
        ++hits[at];
    }
  }

  CoverageCurve curve{variant, target.measure, {}};
  curve.values.reserve(steps);
  std::size_t covered = at_start;
  for (std::size_t i = 1; i <= steps; ++i) {
    covered += hits[i];
    curve.values.push_back(static_cast<double>(covered) / size);
  }
  return curve;
}

CoverageCurve average_curves(const std::vector<CoverageCurve>& curves) {
  if (curves.empty())
    throw std::invalid_argument("average_curves needs at least one curve");
  const std::size_t len = curves.front().values.size();
  for (const auto& c : curves)
    if (c.values.size() != len)
      throw std::invalid_argument("curves differ in length");

  CoverageCurve out{curves.front().kind, curves.front().measure,
                    std::vector<double>(len, 0.0)};
  for (const auto& c : curves)
    for (std::size_t i = 0; i < len; ++i) out.values[i] += c.values[i];
  const double k = static_cast<double>(curves.size());
  for (double& x : out.values) x /= k;
  return out;
}

double auc(const CoverageCurve& curve) {
  if (curve.values.empty())
    throw std::invalid_argument("auc of an empty curve");
  double sum = 0.0;
  for (const double x : curve.values) sum += x;
  return sum / static_cast<double>(curve.values.size());
}

std::map<std::string, CoverageCurve> gap_to_best(
    const std::map<std::string, CoverageCurve>& by_method) {
  if (by_method.size() < 2)
    throw std::invalid_argument("gap_to_best needs at least two methods");
  const std::size_t len = by_method.begin()->second.values.size();
  for (const auto& entry : by_method)
    if (entry.second.values.size() != len)
      throw std::invalid_argument("curves differ in length");

  std::vector<double> best(len, 0.0);
  for (std::size_t i = 0; i < len; ++i) {
    double b = by_method.begin()->second.values[i];
    for (const auto& entry : by_method)
      b = std::max(b, entry.second.values[i]);
    best[i] = b;
  }

  std::map<std::string, CoverageCurve> out;
  for (const auto& [name, curve] : by_method) {
    CoverageCurve gap{curve.kind, curve.measure,
                      std::vector<double>(len, 0.0)};
    for (std::size_t i = 0; i < len; ++i)
      gap.values[i] = curve.values[i] - best[i];
    out.emplace(name, std::move(gap));
  }
  return out;
}

std::map<std::string, std::map<std::string, int>> winner_tally(
    const AucTable& table) {
  if (table.empty()) throw std::invalid_argument("empty auc table");

  const auto& reference = table.begin()->second;
  for (const auto& graph_entry : table) {
    const auto& by_crawler = graph_entry.second;
    if (by_crawler.size() != reference.size())
      throw std::invalid_argument("auc table is not complete");
    auto ref_it = reference.begin();
    for (const auto& crawler_entry : by_crawler) {
      if (crawler_entry.first != ref_it->first ||
          crawler_entry.second.size() != ref_it->second.size())
        throw std::invalid_argument("auc table is not complete");
      auto ref_m = ref_it->second.begin();
      for (const auto& measure_entry : crawler_entry.second) {
        if (measure_entry.first != ref_m->first)
          throw std::invalid_argument("auc table is not complete");
        ++ref_m;
      }
      ++ref_it;
    }
  }

  std::vector<std::string> measures;
  for (const auto& entry : reference.begin()->second)
    measures.push_back(entry.first);

  std::map<std::string, std::map<std::string, int>> tally;
  for (const auto& measure : measures) {
    auto& row = tally[measure];
    for (const auto& crawler_entry : reference) row[crawler_entry.first] = 0;
  }

  for (const auto& graph_entry : table) {
    const auto& by_crawler = graph_entry.second;
    for (const auto& measure : measures) {
      double best = by_crawler.begin()->second.at(measure);
      for (const auto& crawler_entry : by_crawler)
        best = std::max(best, crawler_entry.second.at(measure));
      // exact-tie leaders all score; the pipeline is deterministic so equal
      // aucs really are the same number
      for (const auto& crawler_entry : by_crawler)
        if (crawler_entry.second.at(measure) == best)
          ++tally[measure][crawler_entry.first];
    }
  }
  return tally;
}

}  // namespace crawlbench
