#include "crawlbench/crawl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "crawlbench/errors.hpp"

namespace crawlbench {

StrategyKind parse_strategy(std::string_view name) {
  if (name == "rc") return StrategyKind::rc;
  if (name == "rw") return StrategyKind::rw;
  if (name == "dfs") return StrategyKind::dfs;
  if (name == "bfs") return StrategyKind::bfs;
  if (name == "mod") return StrategyKind::mod;
  if (name == "de") return StrategyKind::de;
  throw ConfigError("unknown crawler '" + std::string(name) + "'");
}

CrawlState::CrawlState(const Graph& g, NodeId seed, SampleEdgePolicy policy)
    : graph_(&g), policy_(policy), seed_(seed) {
  const NodeId n = g.node_count();
  if (seed >= n) throw std::invalid_argument("seed node out of range");
  status_.assign(n, kUnseen);
  observed_pos_.assign(n, 0);
  sample_adj_.assign(n, {});
  observed_at_.assign(n, unseen_mark());
  mark_observed(seed, 0);
}

void CrawlState::mark_observed(NodeId v, std::uint32_t at_iteration) {
  status_[v] = kObserved;
  observed_pos_[v] = static_cast<std::uint32_t>(observed_list_.size());
  observed_list_.push_back(v);
  observed_at_[v] = at_iteration;
}

void CrawlState::add_sample_edge(NodeId a, NodeId b) {
  sample_adj_[a].push_back(b);
  sample_adj_[b].push_back(a);
  ++sample_edge_count_;
}

std::span<const NodeId> CrawlState::query(NodeId v) {
  if (v >= status_.size() || status_[v] != kObserved)
    throw std::invalid_argument(
        "query contract violation: node " + std::to_string(v) +
        " is not in the observed set");

  // close v: swap-remove from the dense frontier list
  const NodeId back = observed_list_.back();
  observed_list_[observed_pos_[v]] = back;
  observed_pos_[back] = observed_pos_[v];
  observed_list_.pop_back();
  status_[v] = kClosed;
  trace_.push_back(v);
  const auto it = static_cast<std::uint32_t>(trace_.size());

  last_newly_.clear();
  last_degree_changed_.clear();

  if (policy_ == SampleEdgePolicy::closed_incident) {
    // v's whole neighborhood is revealed; edges toward already-closed nodes
    // entered S when those nodes were closed
    for (NodeId u : graph_->neighbors(v)) {
      if (status_[u] == kClosed) continue;
      add_sample_edge(v, u);
      if (status_[u] == kUnseen) {
        mark_observed(u, it);
        last_newly_.push_back(u);
      } else {
        last_degree_changed_.push_back(u);
      }
    }
  } else {
    // induced: an edge appears once its second endpoint joins V'. Newly
    // observed neighbors scan their own adjacency against the seen set;
    // earlier arrivals of the same query are already marked, so each new
    // edge is added exactly once.
    for (NodeId u : graph_->neighbors(v)) {
      if (status_[u] != kUnseen) continue;
      mark_observed(u, it);
      last_newly_.push_back(u);
      for (NodeId x : graph_->neighbors(u)) {
        if (status_[x] == kUnseen) continue;
        add_sample_edge(u, x);
        if (status_[x] == kObserved && observed_at_[x] != it)
          last_degree_changed_.push_back(x);
      }
    }
  }

  // a frontier node can gain several edges in one query
  std::sort(last_degree_changed_.begin(), last_degree_changed_.end());
  last_degree_changed_.erase(
      std::unique(last_degree_changed_.begin(), last_degree_changed_.end()),
      last_degree_changed_.end());

  return {last_newly_.data(), last_newly_.size()};
}

bool CrawlState::sample_has_edge(NodeId u, NodeId v) const {
  if (u == v) return false;
  if (status_[u] == kUnseen || status_[v] == kUnseen) return false;
  if (policy_ == SampleEdgePolicy::closed_incident &&
      status_[u] != kClosed && status_[v] != kClosed)
    return false;
  return graph_->has_edge(u, v);
}

double CrawlState::sample_clustering(NodeId v) const {
  if (v >= status_.size()) throw std::out_of_range("node id out of range");
  const auto& nbrs = sample_adj_[v];
  const std::size_t d = nbrs.size();
  if (d < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (sample_has_edge(nbrs[i], nbrs[j])) ++links;
  return 2.0 * static_cast<double>(links) /
         (static_cast<double>(d) * static_cast<double>(d - 1));
}

void validate_crawl_state(const CrawlState& state) {
  const Graph& g = state.graph();
  const NodeId n = g.node_count();
  auto fail = [](const std::string& what) {
    throw std::logic_error("crawl state invariant broken: " + what);
  };

  std::size_t closed = 0, observed = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (state.is_closed(v) && state.is_observed(v))
      fail("node both closed and observed");
    closed += state.is_closed(v);
    observed += state.is_observed(v);

    if (state.sample_degree(v) > g.degree(v))
      fail("sample degree exceeds true degree");
    // closing a node always pulls its whole neighborhood into the sample,
    // under either edge policy
    if (state.is_closed(v) && state.sample_degree(v) != g.degree(v))
      fail("closed node with incomplete neighborhood");
    if (state.is_closed(v))
      for (NodeId u : g.neighbors(v))
        if (!state.is_seen(u)) fail("unseen neighbor of a closed node");
    if (!state.is_seen(v) && state.sample_degree(v) != 0)
      fail("unseen node with sample edges");
  }
  if (closed != state.closed_count()) fail("closed count mismatch");
  if (observed != state.observed_count()) fail("observed count mismatch");
  if (state.trace().size() != state.closed_count())
    fail("trace length vs closed count");
  for (NodeId v : state.trace())
    if (!state.is_closed(v)) fail("traced node not closed");
  for (NodeId v : state.frontier())
    if (!state.is_observed(v)) fail("frontier node not observed");
}

// ---- strategies ------------------------------------------------------------

namespace {

// Frontier ordered by (sample degree asc, node id desc): the max element is
// the MOD pick (highest degree, smallest id among ties) and the low end is
// DE's expansion pool. Keyed updates are O(log |frontier|).
class DegreeFrontier {
 public:
  void reset(NodeId n) {
    ordered_.clear();
    recorded_.assign(n, kAbsent);
    degree_sum_ = 0;
  }

  void insert(NodeId v, NodeId deg) {
    ordered_.emplace(deg, v);
    recorded_[v] = deg;
    degree_sum_ += deg;
  }

  void erase(NodeId v) {
    ordered_.erase({recorded_[v], v});
    degree_sum_ -= recorded_[v];
    recorded_[v] = kAbsent;
  }

  void update(NodeId v, NodeId deg) {
    ordered_.erase({recorded_[v], v});
    degree_sum_ -= recorded_[v];
    ordered_.emplace(deg, v);
    recorded_[v] = deg;
    degree_sum_ += deg;
  }

  std::size_t size() const { return ordered_.size(); }
  double mean_degree() const {
    return static_cast<double>(degree_sum_) /
           static_cast<double>(ordered_.size());
  }

  NodeId top() const { return ordered_.rbegin()->second; }

  // k-th element from the low end (0-based).
  NodeId from_bottom(std::size_t k) const {
    return std::next(ordered_.begin(), static_cast<long>(k))->second;
  }

  // Visits the count highest entries as (degree, id), descending degree and
  // ascending id within equal degrees.
  template <typename Fn>
  void for_top(std::size_t count, Fn&& fn) const {
    auto it = ordered_.rbegin();
    for (std::size_t i = 0; i < count && it != ordered_.rend(); ++i, ++it)
      fn(it->first, it->second);
  }

 private:
  struct Cmp {
    bool operator()(const std::pair<NodeId, NodeId>& a,
                    const std::pair<NodeId, NodeId>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return a.second > b.second;
    }
  };
  static constexpr NodeId kAbsent = std::numeric_limits<NodeId>::max();
  std::set<std::pair<NodeId, NodeId>, Cmp> ordered_;
  std::vector<NodeId> recorded_;  // node -> degree key in ordered_, or kAbsent
  long long degree_sum_ = 0;
};

class RandomCrawler final : public Strategy {
 public:
  StrategyKind kind() const override { return StrategyKind::rc; }
  void on_start(const CrawlState&) override {}
  NodeId select(const CrawlState& state, Rng& rng) override {
    const auto frontier = state.frontier();
    return frontier[rng.uniform_index(frontier.size())];
  }
  void after_query(const CrawlState&, NodeId, std::span<const NodeId>) override {}
};

class RandomWalkCrawler final : public Strategy {
 public:
  explicit RandomWalkCrawler(std::uint64_t hop_cap) : hop_cap_(hop_cap) {}
  StrategyKind kind() const override { return StrategyKind::rw; }
  void on_start(const CrawlState&) override {}

  NodeId select(const CrawlState& state, Rng& rng) override {
    // the walk continues from the last queried node and moves through the
    // sample graph for free until it steps on a frontier node
    NodeId x = state.trace().empty() ? state.seed() : state.trace().back();
    if (state.is_observed(x)) return x;  // before the first query
    std::uint64_t hops = 0;
    for (;;) {
      const auto nbrs = state.sample_neighbors(x);
      const NodeId y = nbrs[rng.uniform_index(nbrs.size())];
      if (state.is_observed(y)) return y;
      x = y;
      if (++hops >= hop_cap_)
        throw std::runtime_error(
            "random walk exceeded " + std::to_string(hop_cap_) +
            " hops without reaching the frontier");
    }
  }

  void after_query(const CrawlState&, NodeId, std::span<const NodeId>) override {}

 private:
  std::uint64_t hop_cap_;
};

// DFS and BFS share the container discipline: newly observed nodes are
// appended in ascending id order, entries already closed by the time they
// surface are skipped.
class DfsCrawler final : public Strategy {
 public:
  StrategyKind kind() const override { return StrategyKind::dfs; }
  void on_start(const CrawlState& state) override {
    stack_.push_back(state.seed());
  }
  NodeId select(const CrawlState& state, Rng&) override {
    while (!stack_.empty() && !state.is_observed(stack_.back()))
      stack_.pop_back();
    if (stack_.empty()) throw std::logic_error("dfs stack exhausted early");
    return stack_.back();
  }
  void after_query(const CrawlState&, NodeId,
                   std::span<const NodeId> newly) override {
    stack_.insert(stack_.end(), newly.begin(), newly.end());
  }

 private:
  std::vector<NodeId> stack_;
};

class BfsCrawler final : public Strategy {
 public:
  StrategyKind kind() const override { return StrategyKind::bfs; }
  void on_start(const CrawlState& state) override {
    queue_.push_back(state.seed());
  }
  NodeId select(const CrawlState& state, Rng&) override {
    while (head_ < queue_.size() && !state.is_observed(queue_[head_])) ++head_;
    if (head_ >= queue_.size())
      throw std::logic_error("bfs queue exhausted early");
    return queue_[head_];
  }
  void after_query(const CrawlState&, NodeId,
                   std::span<const NodeId> newly) override {
    queue_.insert(queue_.end(), newly.begin(), newly.end());
  }

 private:
  std::vector<NodeId> queue_;
  std::size_t head_ = 0;
};

class MaxDegreeCrawler final : public Strategy {
 public:
  StrategyKind kind() const override { return StrategyKind::mod; }
  void on_start(const CrawlState& state) override {
    frontier_.reset(state.graph().node_count());
    frontier_.insert(state.seed(), state.sample_degree(state.seed()));
  }
  NodeId select(const CrawlState&, Rng&) override { return frontier_.top(); }
  void after_query(const CrawlState& state, NodeId queried,
                   std::span<const NodeId> newly) override {
    frontier_.erase(queried);
    for (NodeId u : newly) frontier_.insert(u, state.sample_degree(u));
    for (NodeId u : state.last_degree_changed())
      frontier_.update(u, state.sample_degree(u));
  }

 private:
  DegreeFrontier frontier_;
};

class DensificationExpansionCrawler final : public Strategy {
 public:
  explicit DensificationExpansionCrawler(const DeConfig& cfg) : cfg_(cfg) {}
  StrategyKind kind() const override { return StrategyKind::de; }

  void on_start(const CrawlState& state) override {
    const NodeId n = state.graph().node_count();
    frontier_.reset(n);
    frontier_.insert(state.seed(), state.sample_degree(state.seed()));
    clustering_.assign(n, 0.0);
    clustering_stale_.assign(n, 1);
  }

  NodeId select(const CrawlState& state, Rng& rng) override {
    const std::size_t size = frontier_.size();
    if (size == 1) return frontier_.top();

    if (mode_ == Mode::expansion) {
      // low-degree frontier nodes sit at the border of the explored region;
      // pick one uniformly from the bottom of the degree order
      const auto pool = std::max<std::size_t>(
          1, static_cast<std::size_t>(
                 std::floor((1.0 - cfg_.top_fraction) *
                            static_cast<double>(size))));
      return frontier_.from_bottom(rng.uniform_index(pool));
    }

    // densification: among the highest-degree slice, prefer nodes whose seen
    // neighborhood is loosely connected, i.e. likely to close many triangles
    // we have not seen yet
    const auto slice = std::max<std::size_t>(
        1, static_cast<std::size_t>(
               std::floor(cfg_.top_fraction * static_cast<double>(size))));
    const double mean = frontier_.mean_degree();
    NodeId best = 0;
    double best_score = -1.0;
    bool have = false;
    frontier_.for_top(slice, [&](NodeId deg, NodeId v) {
      const double score =
          de_score(static_cast<double>(deg), mean, clustering(state, v));
      if (!have || score > best_score ||
          (score == best_score && v < best)) {
        best = v;
        best_score = score;
        have = true;
      }
    });
    return best;
  }

  void after_query(const CrawlState& state, NodeId queried,
                   std::span<const NodeId> newly) override {
    frontier_.erase(queried);
    for (NodeId u : newly) {
      frontier_.insert(u, state.sample_degree(u));
      clustering_stale_[u] = 1;
    }
    for (NodeId u : state.last_degree_changed()) {
      frontier_.update(u, state.sample_degree(u));
      clustering_stale_[u] = 1;
    }

    // mode accounting: exponentially weighted average of how many new nodes
    // each mode's queries surface; both sides start from the seed's yield
    const auto count = static_cast<double>(newly.size());
    if (!stats_ready_) {
      new_yield_[0] = new_yield_[1] = count;
      stats_ready_ = true;
    } else {
      auto& own = new_yield_[static_cast<int>(mode_)];
      own = (1.0 - cfg_.decay) * own + cfg_.decay * count;
    }
    ++burst_;
    const double own = new_yield_[static_cast<int>(mode_)];
    const double other = new_yield_[1 - static_cast<int>(mode_)];
    if (burst_ >= cfg_.min_burst && own < cfg_.switch_ratio * other) {
      mode_ = mode_ == Mode::expansion ? Mode::densification : Mode::expansion;
      burst_ = 0;
    }
  }

 private:
  enum class Mode { expansion = 0, densification = 1 };

  double clustering(const CrawlState& state, NodeId v) {
    // clustering inside S only changes when v gains a sample edge, so cache
    // until the degree-change notification flips the stale bit
    if (clustering_stale_[v]) {
      clustering_[v] = state.sample_clustering(v);
      clustering_stale_[v] = 0;
    }
    return clustering_[v];
  }

  DeConfig cfg_;
  DegreeFrontier frontier_;
  std::vector<double> clustering_;
  std::vector<std::uint8_t> clustering_stale_;
  Mode mode_ = Mode::expansion;
  double new_yield_[2] = {0.0, 0.0};
  bool stats_ready_ = false;
  int burst_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(StrategyKind kind,
                                        const CrawlOptions& options) {
  switch (kind) {
    case StrategyKind::rc: return std::make_unique<RandomCrawler>();
    case StrategyKind::rw:
      return std::make_unique<RandomWalkCrawler>(options.rw_hop_cap);
    case StrategyKind::dfs: return std::make_unique<DfsCrawler>();
    case StrategyKind::bfs: return std::make_unique<BfsCrawler>();
    case StrategyKind::mod: return std::make_unique<MaxDegreeCrawler>();
    case StrategyKind::de:
      return std::make_unique<DensificationExpansionCrawler>(options.de);
  }
  throw std::logic_error("unreachable strategy kind");
}

CrawlSession::CrawlSession(const Graph& g, StrategyKind kind, NodeId seed,
                           std::uint64_t rng_seed, CrawlOptions options)
    : state_(g, seed, options.sample_edges),
      strategy_(make_strategy(kind, options)),
      rng_(rng_seed) {
  strategy_->on_start(state_);
}

NodeId CrawlSession::select_next() {
  if (done()) throw std::logic_error("crawl already complete");
  return strategy_->select(state_, rng_);
}

std::span<const NodeId> CrawlSession::query(NodeId v) {
  const auto newly = state_.query(v);
  strategy_->after_query(state_, v, newly);
  return newly;
}

RunTrace run_crawl(const Graph& g, StrategyKind kind, NodeId seed,
                   std::uint64_t rng_seed, const CrawlOptions& options,
                   const CrawlObserver& observer) {
  if (!is_connected(g))
    throw DataError("crawl requires a connected graph");
  CrawlSession session(g, kind, seed, rng_seed, options);
  while (!session.done()) {
    const NodeId v = session.select_next();
    const auto newly = session.query(v);
    if (observer) observer(session.state(), v, newly);
  }

  RunTrace run;
  run.node_count = g.node_count();
  run.seed = seed;
  run.kind = kind;
  run.rng_seed = rng_seed;
  run.trace = session.state().trace();
  run.observed_at = session.state().observed_at();
  return run;
}

}  // namespace crawlbench
