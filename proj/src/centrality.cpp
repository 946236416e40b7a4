#include "crawlbench/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "crawlbench/errors.hpp"

namespace crawlbench {

Measure parse_measure(std::string_view name) {
  if (name == "degree") return Measure::degree;
  if (name == "coreness") return Measure::coreness;
  if (name == "betweenness") return Measure::betweenness;
  if (name == "eccentricity") return Measure::eccentricity;
  throw ConfigError("unknown measure '" + std::string(name) + "'");
}

ScoreTable degree_scores(const Graph& g) {
  ScoreTable t{Measure::degree, {}};
  t.scores.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    t.scores.push_back(static_cast<double>(g.degree(v)));
  return t;
}

ScoreTable coreness_scores(const Graph& g) {
  // Peel nodes in order of (current) degree using bucketed counting sort;
  // when a node is removed its core number is the degree it was removed at.
  const NodeId n = g.node_count();
  ScoreTable t{Measure::coreness, std::vector<double>(n, 0.0)};
  if (n == 0) return t;

  NodeId max_deg = 0;
  std::vector<NodeId> deg(n);
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  std::vector<NodeId> bin(max_deg + 2, 0);
  for (NodeId v = 0; v < n; ++v) ++bin[deg[v]];
  NodeId start = 0;
  for (NodeId d = 0; d <= max_deg; ++d) {
    const NodeId count = bin[d];
    bin[d] = start;
    start += count;
  }

  std::vector<NodeId> order(n), pos(n);
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]];
    order[pos[v]] = v;
    ++bin[deg[v]];
  }
  // restore bucket starts
  for (NodeId d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (NodeId i = 0; i < n; ++i) {
    const NodeId v = order[i];
    t.scores[v] = static_cast<double>(deg[v]);
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] <= deg[v]) continue;
      // swap u toward the front of its bucket, then shrink its degree
      const NodeId du = deg[u], pu = pos[u];
      const NodeId pw = bin[du], w = order[pw];
      if (u != w) {
        std::swap(order[pu], order[pw]);
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[du];
      --deg[u];
    }
  }
  return t;
}

namespace {

// One Brandes source sweep: BFS shortest-path DAG, then dependency
// back-propagation. Adds delta_s(v) for all v != s into acc.
void brandes_from(const Graph& g, NodeId s, std::vector<double>& acc,
                  std::vector<NodeId>& order, std::vector<long long>& dist,
                  std::vector<double>& sigma, std::vector<double>& delta) {
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(sigma.begin(), sigma.end(), 0.0);
  std::fill(delta.begin(), delta.end(), 0.0);
  order.clear();

  dist[s] = 0;
  sigma[s] = 1.0;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (NodeId u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        order.push_back(u);
      }
      if (dist[u] == dist[v] + 1) sigma[u] += sigma[v];
    }
  }
  for (std::size_t i = order.size(); i-- > 1;) {  // skip s itself at index 0
    const NodeId w = order[i];
    for (NodeId u : g.neighbors(w))
      if (dist[u] == dist[w] - 1)
        delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
    acc[w] += delta[w];
  }
}

}  // namespace

ScoreTable betweenness_scores(const Graph& g) {
  const NodeId n = g.node_count();
  ScoreTable t{Measure::betweenness, std::vector<double>(n, 0.0)};
  std::vector<NodeId> order;
  std::vector<long long> dist(n);
  std::vector<double> sigma(n), delta(n);
  order.reserve(n);
  for (NodeId s = 0; s < n; ++s)
    brandes_from(g, s, t.scores, order, dist, sigma, delta);
  // each unordered pair was visited from both endpoints
  for (double& x : t.scores) x /= 2.0;
  return t;
}

ScoreTable betweenness_approx(const Graph& g, NodeId pivot_count, Rng& rng) {
  const NodeId n = g.node_count();
  if (pivot_count < 1 || pivot_count > n)
    throw std::invalid_argument("pivot count must be in [1, |V|]");

  // sample without replacement (partial Fisher-Yates), then sort so the
  // floating-point accumulation order never depends on the draw order
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (NodeId i = 0; i < pivot_count; ++i) {
    const auto j = i + rng.uniform_index(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(pivot_count);
  std::sort(pool.begin(), pool.end());

  ScoreTable t{Measure::betweenness, std::vector<double>(n, 0.0)};
  std::vector<NodeId> order;
  std::vector<long long> dist(n);
  std::vector<double> sigma(n), delta(n);
  order.reserve(n);
  for (NodeId s : pool)
    brandes_from(g, s, t.scores, order, dist, sigma, delta);

  const double scale =
      static_cast<double>(n) / static_cast<double>(pivot_count) / 2.0;
  for (double& x : t.scores) x *= scale;
  return t;
}

ScoreTable eccentricity_scores(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw DataError("eccentricity needs a nonempty graph");

  ScoreTable t{Measure::eccentricity, std::vector<double>(n, 0.0)};
  std::vector<long long> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    long long ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = queue[head];
      ecc = dist[v];
      for (NodeId u : g.neighbors(v))
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
    }
    if (queue.size() != n)
      throw DataError("eccentricity needs a connected graph");
    t.scores[s] = static_cast<double>(ecc);
  }
  return t;
}

TargetSet build_target_set(const ScoreTable& table, double p) {
  const std::size_t n = table.scores.size();
  if (n == 0) throw std::invalid_argument("empty score table");
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("target fraction must be in (0, 1]");

  const auto k = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(n)));
  const std::size_t size = std::min(std::max<std::size_t>(k, 1), n);

  const bool minimize = measure_minimizes(table.measure);
  std::vector<NodeId> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::nth_element(idx.begin(), idx.begin() + (size - 1), idx.end(),
                   [&](NodeId a, NodeId b) {
                     const double sa = table.scores[a], sb = table.scores[b];
                     if (sa != sb) return minimize ? sa < sb : sa > sb;
                     return a < b;
                   });

  TargetSet ts;
  ts.measure = table.measure;
  ts.fraction = p;
  ts.minimize = minimize;
  ts.graph_node_count = static_cast<NodeId>(n);
  ts.members.assign(idx.begin(), idx.begin() + size);
  std::sort(ts.members.begin(), ts.members.end());
  return ts;
}

void write_scores_csv(std::ostream& out, const Graph& g,
                      const ScoreTable& table) {
  if (table.scores.size() != g.node_count())
    throw std::invalid_argument("score table does not match graph");
  out << "node_label,measure,score\n";
  char buf[40];
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::snprintf(buf, sizeof buf, "%.17g", table.scores[v]);
    out << g.label(v) << ',' << measure_name(table.measure) << ',' << buf
        << '\n';
  }
}

ScoreTable read_scores_csv(std::istream& in, Measure expected,
                           NodeId node_count) {
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("node_label,measure,score", 0) != 0)
    throw DataError("score csv: missing header");

  ScoreTable t{expected, {}};
  t.scores.reserve(node_count);
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    // split from the right: labels may contain commas, scores never do
    const auto c2 = line.rfind(',');
    const auto c1 = c2 == std::string::npos || c2 == 0
                        ? std::string::npos
                        : line.rfind(',', c2 - 1);
    if (c1 == std::string::npos)
      throw ParseError("score csv: expected 3 fields", line_no);
    const auto measure = line.substr(c1 + 1, c2 - c1 - 1);
    if (measure != measure_name(expected))
      throw DataError("score csv: unexpected measure '" + measure + "'");
    try {
      t.scores.push_back(std::stod(line.substr(c2 + 1)));
    } catch (const std::exception&) {
      throw ParseError("score csv: bad score value", line_no);
    }
  }
  if (t.scores.size() != node_count)
    throw DataError("score csv: row count does not match graph");
  return t;
}

}  // namespace crawlbench
