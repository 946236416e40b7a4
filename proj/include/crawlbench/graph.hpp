#pragma once

// Immutable undirected simple graph over dense ids 0..n-1, plus edge-list
// text I/O. Parallel edges and self-loops are dropped on construction, so
// every algorithm downstream can assume a simple graph.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crawlbench {

using NodeId = std::uint32_t;

class Graph {
 public:
  Graph() = default;

  // Edges may contain duplicates and self-loops; both are discarded.
  // Endpoints must be < node_count. labels, when given, map internal id to
  // the original external label and must have node_count entries.
  Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges,
        std::vector<std::string> labels = {});

  NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_[v].data(), adj_[v].size()};
  }
  NodeId degree(NodeId v) const { return static_cast<NodeId>(adj_[v].size()); }
  bool has_edge(NodeId u, NodeId v) const;  // binary search, adjacency is sorted

  bool has_labels() const { return !labels_.empty(); }
  // Original label when the graph came from a file, decimal id otherwise.
  std::string label(NodeId v) const;

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

// Reads whitespace-separated "u v" pairs, one edge per line. Lines starting
// with '#' or '%' and blank lines are skipped. Labels are arbitrary tokens
// and get internal ids in order of first appearance. Throws ParseError on a
// line with a token count other than 2 and DataError when no nodes remain.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

// Writes one "label_u label_v" line per edge; parsing it back yields the
// same graph up to the label->id assignment.
void serialize_edge_list(const Graph& g, std::ostream& out);

bool is_connected(const Graph& g);

// Largest connected component (ties broken toward the component containing
// the smallest node id), with ids re-compacted in ascending order of the old
// ids and labels carried over. Errors on an empty graph.
Graph giant_component(const Graph& g);

// Fraction of existing links among the neighbors of v: 2*links/(deg*(deg-1)),
// defined as 0 when deg(v) < 2.
double local_clustering(const Graph& g, NodeId v);

}  // namespace crawlbench
