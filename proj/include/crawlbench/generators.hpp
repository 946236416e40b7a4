#pragma once

// Synthetic graph families used by the benchmarks and the test-bed. All
// generators produce connected simple graphs with the documented node
// numbering, so seeds and traces are meaningful across runs.

#include <string_view>

#include "crawlbench/graph.hpp"
#include "crawlbench/rng.hpp"

namespace crawlbench {

// 0-1-2-...-n-1.
Graph make_path(NodeId n);

// Node 0 is the hub, 1..n-1 are leaves.
Graph make_star(NodeId n);

Graph make_clique(NodeId n);

// Two cliques, A on 0..a-1 and B on a..a+b-1, joined by the single bridge
// edge (a-1, a). Both sides need at least 2 nodes.
Graph make_barbell(NodeId a, NodeId b);

// G(n, p). Draws are retried (up to 50) until the sample is connected; if
// none is, giant_if_disconnected picks between falling back to the giant
// component of the last draw (true, the default) and returning that draw
// unchanged (false).
Graph make_erdos_renyi(NodeId n, double p, Rng& rng,
                       bool giant_if_disconnected = true);

// Barabasi-Albert preferential attachment: starts from m isolated nodes,
// then each new node attaches to m distinct existing nodes chosen with
// probability proportional to their current degree (repeated-endpoint list
// sampling). Requires n >= m + 1, m >= 1.
Graph make_preferential_attachment(NodeId n, NodeId m, Rng& rng);

// Parses generator specs used in configs and on the command line:
//   path(n) star(n) clique(n) barbell(a,b) er(n,p[,seed]) pa(n,m[,seed])
// with erdos_renyi/preferential_attachment accepted as long aliases and
// seed defaulting to 0. Throws ConfigError on anything else.
bool looks_like_generator_spec(std::string_view spec);
Graph make_from_spec(std::string_view spec);

}  // namespace crawlbench
