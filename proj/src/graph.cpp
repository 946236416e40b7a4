#include "crawlbench/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "crawlbench/errors.hpp"

namespace crawlbench {

Graph::Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges,
             std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count)
    throw std::invalid_argument("label list size does not match node count");

  // normalize to (min,max), drop self-loops, dedup
  std::erase_if(edges, [&](auto& e) {
    if (e.first >= node_count || e.second >= node_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
    return e.first == e.second;
  });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  adj_.assign(node_count, {});
  std::vector<NodeId> deg(node_count, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  for (NodeId v = 0; v < node_count; ++v) adj_[v].reserve(deg[v]);
  for (auto [u, v] : edges) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  edge_count_ = edges.size();
  labels_ = std::move(labels);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  const auto& smaller = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const NodeId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(smaller.begin(), smaller.end(), other);
}

std::string Graph::label(NodeId v) const {
  if (v >= node_count()) throw std::out_of_range("node id out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw ParseError("expected exactly 2 tokens", line_no);
    // sequence the interning so ids follow reading order (argument
    // evaluation order would be unspecified)
    const NodeId ua = intern(a);
    const NodeId ub = intern(b);
    edges.emplace_back(ua, ub);
  }
  if (labels.empty()) throw DataError("edge list contains no nodes");
  const auto node_count = static_cast<NodeId>(labels.size());
  return Graph(node_count, std::move(edges), std::move(labels));
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return parse_edge_list(in);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
}

namespace {

// BFS from start over unvisited nodes; returns the component, ascending.
std::vector<NodeId> component_of(const Graph& g, NodeId start,
                                 std::vector<std::uint8_t>& visited) {
  std::vector<NodeId> comp, queue{start};
  visited[start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    comp.push_back(v);
    for (NodeId u : g.neighbors(v))
      if (!visited[u]) {
        visited[u] = 1;
        queue.push_back(u);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  std::vector<std::uint8_t> visited(g.node_count(), 0);
  return component_of(g, 0, visited).size() == g.node_count();
}

Graph giant_component(const Graph& g) {
  if (g.node_count() == 0) throw DataError("empty graph has no components");

  std::vector<std::uint8_t> visited(g.node_count(), 0);
  std::vector<NodeId> best;
  // scanning ids upward means the first component of maximal size is the one
  // containing the smallest id, which settles ties
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (visited[v]) continue;
    auto comp = component_of(g, v, visited);
    if (comp.size() > best.size()) best = std::move(comp);
  }

  std::vector<NodeId> remap(g.node_count(), 0);
  for (std::size_t i = 0; i < best.size(); ++i)
    remap[best[i]] = static_cast<NodeId>(i);

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::string> labels;
  if (g.has_labels()) labels.reserve(best.size());
  for (NodeId old : best) {
    if (g.has_labels()) labels.push_back(g.label(old));
    for (NodeId u : g.neighbors(old))
      if (old < u) edges.emplace_back(remap[old], remap[u]);
  }
  return Graph(static_cast<NodeId>(best.size()), std::move(edges),
               std::move(labels));
}

double local_clustering(const Graph& g, NodeId v) {
  if (v >= g.node_count()) throw std::out_of_range("node id out of range");
  const auto nbrs = g.neighbors(v);
  const std::size_t d = nbrs.size();
  if (d < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (g.has_edge(nbrs[i], nbrs[j])) ++links;
  return 2.0 * static_cast<double>(links) /
         (static_cast<double>(d) * static_cast<double>(d - 1));
}

}  // namespace crawlbench
