#include "crawlbench/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "crawlbench/errors.hpp"

namespace crawlbench {

Graph make_path(NodeId n) {
  if (n == 0) throw std::invalid_argument("path needs at least 1 node");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n ? n - 1 : 0);
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, std::move(edges));
}

Graph make_star(NodeId n) {
  if (n == 0) throw std::invalid_argument("star needs at least 1 node");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n ? n - 1 : 0);
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph make_clique(NodeId n) {
  if (n == 0) throw std::invalid_argument("clique needs at least 1 node");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph make_barbell(NodeId a, NodeId b) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("barbell sides need at least 2 nodes each");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < a; ++u)
    for (NodeId v = u + 1; v < a; ++v) edges.emplace_back(u, v);
  for (NodeId u = a; u < a + b; ++u)
    for (NodeId v = u + 1; v < a + b; ++v) edges.emplace_back(u, v);
  edges.emplace_back(a - 1, a);  // the bridge
  return Graph(a + b, std::move(edges));
}

Graph make_erdos_renyi(NodeId n, double p, Rng& rng,
                       bool giant_if_disconnected) {
  if (n == 0) throw std::invalid_argument("er needs at least 1 node");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("er probability must be in [0,1]");

  constexpr int kAttempts = 50;
  Graph last;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    if (p >= 1.0) {
      return make_clique(n);
    } else if (p > 0.0) {
      // geometric skipping over the n*(n-1)/2 pair slots
      const double log1mp = std::log1p(-p);
      const std::uint64_t total =
          static_cast<std::uint64_t>(n) * (n - 1) / 2;
      std::uint64_t slot = 0;
      while (true) {
        const double r = rng.uniform_unit();
        const double skip = std::floor(std::log1p(-r) / log1mp);
        slot += static_cast<std::uint64_t>(skip) + 1;
        if (slot > total) break;
        // slot-1 is the 0-based pair index; invert the triangular layout
        const std::uint64_t k = slot - 1;
        const double un =
            (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0;
        NodeId u = static_cast<NodeId>(un);
        while (static_cast<std::uint64_t>(u) * (u + 1) / 2 > k) --u;
        while (static_cast<std::uint64_t>(u + 1) * (u + 2) / 2 <= k) ++u;
        const NodeId v = static_cast<NodeId>(
            k - static_cast<std::uint64_t>(u) * (u + 1) / 2);
        edges.emplace_back(u + 1, v);
      }
    }
    last = Graph(n, std::move(edges));
    if (is_connected(last)) return last;
  }
  return giant_if_disconnected ? giant_component(last) : last;
}

Graph make_preferential_attachment(NodeId n, NodeId m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("pa needs m >= 1");
  if (n < m + 1) throw std::invalid_argument("pa needs n >= m + 1");

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(n - m) * m);
  // every edge endpoint lands here once, so a uniform draw from the list is
  // a degree-proportional draw over nodes
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());

  std::vector<NodeId> targets(m);
  for (NodeId i = 0; i < m; ++i) targets[i] = i;

  std::unordered_set<NodeId> picked;
  for (NodeId s = m; s < n; ++s) {
    for (NodeId t : targets) {
      edges.emplace_back(s, t);
      endpoints.push_back(s);
      endpoints.push_back(t);
    }
    if (s + 1 == n) break;
    picked.clear();
    while (picked.size() < m) {
      const NodeId cand =
          endpoints[rng.uniform_index(endpoints.size())];
      picked.insert(cand);
    }
    targets.assign(picked.begin(), picked.end());
    // unordered_set iteration order is not pinned by the standard; sort so
    // the edge stream stays deterministic across standard libraries
    std::sort(targets.begin(), targets.end());
  }
  return Graph(n, std::move(edges));
}

namespace {

std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    auto piece = s.substr(start, comma == std::string_view::npos
                                     ? std::string_view::npos
                                     : comma - start);
    while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t'))
      piece.remove_prefix(1);
    while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t'))
      piece.remove_suffix(1);
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
  return value;
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
  }
}

}  // namespace

bool looks_like_generator_spec(std::string_view spec) {
  const auto open = spec.find('(');
  if (open == std::string_view::npos || spec.empty() || spec.back() != ')')
    return false;
  static const char* kNames[] = {"path",        "star", "clique",
                                 "barbell",     "er",   "erdos_renyi",
                                 "pa",          "preferential_attachment"};
  const auto name = spec.substr(0, open);
  for (const char* n : kNames)
    if (name == n) return true;
  return false;
}

Graph make_from_spec(std::string_view spec) {
  const auto open = spec.find('(');
  if (open == std::string_view::npos || spec.empty() || spec.back() != ')')
    throw ConfigError("bad generator spec: '" + std::string(spec) + "'");
  const std::string name(spec.substr(0, open));
  const auto args =
      split_args(spec.substr(open + 1, spec.size() - open - 2));

  auto want = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw ConfigError("generator '" + name + "' takes " +
                        std::to_string(lo) +
                        (hi == lo ? "" : ".." + std::to_string(hi)) +
                        " arguments");
  };

  if (name == "path") {
    want(1, 1);
    return make_path(static_cast<NodeId>(parse_u64(args[0], "node count")));
  }
  if (name == "star") {
    want(1, 1);
    return make_star(static_cast<NodeId>(parse_u64(args[0], "node count")));
  }
  if (name == "clique") {
    want(1, 1);
    return make_clique(static_cast<NodeId>(parse_u64(args[0], "node count")));
  }
  if (name == "barbell") {
    want(2, 2);
    return make_barbell(static_cast<NodeId>(parse_u64(args[0], "side size")),
                        static_cast<NodeId>(parse_u64(args[1], "side size")));
  }
  if (name == "er" || name == "erdos_renyi") {
    want(2, 3);
    Rng rng(args.size() > 2 ? parse_u64(args[2], "seed") : 0);
    return make_erdos_renyi(
        static_cast<NodeId>(parse_u64(args[0], "node count")),
        parse_double(args[1], "edge probability"), rng);
  }
  if (name == "pa" || name == "preferential_attachment") {
    want(2, 3);
    Rng rng(args.size() > 2 ? parse_u64(args[2], "seed") : 0);
    return make_preferential_attachment(
        static_cast<NodeId>(parse_u64(args[0], "node count")),
        static_cast<NodeId>(parse_u64(args[1], "edges per node")), rng);
  }
  throw ConfigError("unknown generator '" + name + "'");
}

}  // namespace crawlbench
