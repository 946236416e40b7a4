#pragma once

// The online crawling model. A crawl holds three things: closed nodes
// (queried, full neighbor list known), observed nodes (seen as neighbors but
// not queried yet, the frontier), and the sample graph S accumulated so far.
// One query closes one node. Strategies only ever look at the crawl state,
// never at the underlying graph, which is what makes the comparison between
// them honest.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "crawlbench/graph.hpp"
#include "crawlbench/rng.hpp"

namespace crawlbench {

// closed_incident: an edge enters S as soon as either endpoint is closed
// (a query reveals the closed node's full adjacency). induced: an edge
// enters S once both endpoints have been seen, i.e. S is the subgraph
// induced on closed + observed nodes.
enum class SampleEdgePolicy { closed_incident, induced };

enum class StrategyKind { rc, rw, dfs, bfs, mod, de };

constexpr const char* strategy_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::rc: return "rc";
    case StrategyKind::rw: return "rw";
    case StrategyKind::dfs: return "dfs";
    case StrategyKind::bfs: return "bfs";
    case StrategyKind::mod: return "mod";
    case StrategyKind::de: return "de";
  }
  return "?";
}
StrategyKind parse_strategy(std::string_view name);  // ConfigError on unknown

struct DeConfig {
  // Densification scores only the top fraction of the frontier by sample
  // degree; expansion draws from the rest.
  double top_fraction = 0.2;
  // Weight of the newest observation in the per-mode average of
  // newly-observed-node counts.
  double decay = 0.5;
  // Queries that must elapse in the current mode before a switch is allowed.
  int min_burst = 10;
  // Switch when own average < switch_ratio * other mode's average.
  double switch_ratio = 0.5;
};

struct CrawlOptions {
  SampleEdgePolicy sample_edges = SampleEdgePolicy::closed_incident;
  DeConfig de;
  // A random walk that takes this many hops without reaching the frontier is
  // assumed stuck and aborts the run.
  std::uint64_t rw_hop_cap = 100'000'000;
};

class CrawlState {
 public:
  CrawlState(const Graph& g, NodeId seed,
             SampleEdgePolicy policy = SampleEdgePolicy::closed_incident);

  // Closes v and ingests its neighborhood. v must currently be observed;
  // anything else is a contract violation (std::invalid_argument). Returns
  // the nodes that entered the observed set, in ascending id order.
  std::span<const NodeId> query(NodeId v);

  const Graph& graph() const { return *graph_; }
  SampleEdgePolicy policy() const { return policy_; }
  NodeId seed() const { return seed_; }

  bool is_closed(NodeId v) const { return status_[v] == kClosed; }
  bool is_observed(NodeId v) const { return status_[v] == kObserved; }
  bool is_seen(NodeId v) const { return status_[v] != kUnseen; }

  std::size_t closed_count() const { return trace_.size(); }
  std::size_t observed_count() const { return observed_list_.size(); }
  std::size_t seen_count() const { return trace_.size() + observed_list_.size(); }
  bool frontier_empty() const { return observed_list_.empty(); }

  // Current frontier in an unspecified but deterministic order.
  std::span<const NodeId> frontier() const {
    return {observed_list_.data(), observed_list_.size()};
  }

  // Sample-graph views. For a closed node the sample neighborhood equals the
  // true one under the closed_incident policy.
  NodeId sample_degree(NodeId v) const {
    return static_cast<NodeId>(sample_adj_[v].size());
  }
  std::span<const NodeId> sample_neighbors(NodeId v) const {
    return {sample_adj_[v].data(), sample_adj_[v].size()};
  }
  std::size_t sample_edge_count() const { return sample_edge_count_; }
  bool sample_has_edge(NodeId u, NodeId v) const;

  // Local clustering of v inside the sample graph.
  double sample_clustering(NodeId v) const;

  // Number of queries made so far; curves index from 1 on this.
  std::size_t iteration() const { return trace_.size(); }
  const std::vector<NodeId>& trace() const { return trace_; }

  // Query index (1-based) after which each node became observed; 0 for the
  // seed, unseen_mark() for nodes not seen yet.
  const std::vector<std::uint32_t>& observed_at() const { return observed_at_; }
  static constexpr std::uint32_t unseen_mark() { return 0xffffffffu; }

  // Bookkeeping from the most recent query: the frontier nodes whose sample
  // degree changed, not counting the ones that just entered (deduplicated,
  // ascending). Strategies that track degrees key their updates off this.
  std::span<const NodeId> last_degree_changed() const {
    return {last_degree_changed_.data(), last_degree_changed_.size()};
  }

 private:
  void mark_observed(NodeId v, std::uint32_t at_iteration);
  void add_sample_edge(NodeId a, NodeId b);

  static constexpr std::uint8_t kUnseen = 0, kObserved = 1, kClosed = 2;

  const Graph* graph_ = nullptr;
  SampleEdgePolicy policy_ = SampleEdgePolicy::closed_incident;
  NodeId seed_ = 0;
  std::vector<std::uint8_t> status_;
  std::vector<NodeId> observed_list_;       // dense frontier, swap-removed
  std::vector<std::uint32_t> observed_pos_; // node -> index in observed_list_
  std::vector<std::vector<NodeId>> sample_adj_;
  std::size_t sample_edge_count_ = 0;
  std::vector<NodeId> trace_;
  std::vector<std::uint32_t> observed_at_;
  std::vector<NodeId> last_newly_;
  std::vector<NodeId> last_degree_changed_;
};

// Full-state consistency sweep used by the property tests and exposed for
// debugging: set disjointness, closure of closed neighborhoods, sample
// degrees bounded by true degrees (equal for closed nodes under
// closed_incident), trace/counter agreement. Throws std::logic_error with a
// description on the first violation.
void validate_crawl_state(const CrawlState& state);

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual StrategyKind kind() const = 0;
  // Called once when the seed is observed, before any query.
  virtual void on_start(const CrawlState& state) = 0;
  // Next node to query; must return a member of the frontier. May consume
  // rng and may tidy internal lazily-deleted entries, so call it once per
  // query.
  virtual NodeId select(const CrawlState& state, Rng& rng) = 0;
  // Called after every query with the node just closed and the nodes that
  // became observed.
  virtual void after_query(const CrawlState& state, NodeId queried,
                           std::span<const NodeId> newly) = 0;
};

std::unique_ptr<Strategy> make_strategy(StrategyKind kind,
                                        const CrawlOptions& options = {});

// Densification score used by DE: (deg / mean_deg) * (1 - clustering).
inline double de_score(double sample_degree, double mean_degree,
                       double clustering) {
  return sample_degree / mean_degree * (1.0 - clustering);
}

// One crawl wired together: state + strategy + its private rng stream.
class CrawlSession {
 public:
  CrawlSession(const Graph& g, StrategyKind kind, NodeId seed,
               std::uint64_t rng_seed, CrawlOptions options = {});

  bool done() const { return state_.frontier_empty(); }
  NodeId select_next();                    // strategy's pick, not yet queried
  std::span<const NodeId> query(NodeId v); // close v and notify the strategy
  std::span<const NodeId> step() { return query(select_next()); }

  const CrawlState& state() const { return state_; }
  StrategyKind kind() const { return strategy_->kind(); }

 private:
  CrawlState state_;
  std::unique_ptr<Strategy> strategy_;
  Rng rng_;
};

struct RunTrace {
  NodeId node_count = 0;
  NodeId seed = 0;
  StrategyKind kind = StrategyKind::rc;
  std::uint64_t rng_seed = 0;
  std::vector<NodeId> trace;                // queried nodes in order
  std::vector<std::uint32_t> observed_at;   // as in CrawlState::observed_at
};

using CrawlObserver = std::function<void(
    const CrawlState&, NodeId queried, std::span<const NodeId> newly)>;

// Runs a crawl to completion (S == G). The graph must be connected and the
// seed a valid node. The observer, when given, fires after every query.
RunTrace run_crawl(const Graph& g, StrategyKind kind, NodeId seed,
                   std::uint64_t rng_seed, const CrawlOptions& options = {},
                   const CrawlObserver& observer = {});

}  // namespace crawlbench
