"""End-to-end smoke tests for the python bindings.

The heavy verification lives in the C++ suites; this checks that the module
loads, the main operations round-trip sensibly, and errors surface as the
registered exception types.
"""

import math

import pytest

import crawlbench as cb


def test_parse_and_query_graph():
    g = cb.parse_edge_list("a b\nb c\nc a\nc d\n")
    assert g.node_count == 4
    assert g.edge_count == 4
    assert g.degree(2) == 3  # "c" appears third
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 3)
    assert g.label(0) == "a"
    assert g.neighbors(2) == [0, 1, 3]
    assert "nodes=4" in repr(g)


def test_serialize_round_trip():
    g = cb.generate("pa(60,2,9)")
    again = cb.parse_edge_list(cb.serialize_edge_list(g))
    assert again.node_count == g.node_count
    assert again.edge_count == g.edge_count


def test_parse_error_carries_type():
    with pytest.raises(cb.DataError):
        cb.parse_edge_list("a b c\n")
    with pytest.raises(cb.DataError):
        cb.load_edge_list("/nonexistent/graph.edges")
    with pytest.raises(cb.ConfigError):
        cb.generate("moebius(7)")


def test_generators_and_components():
    barbell = cb.generate("barbell(5,5)")
    assert barbell.node_count == 10
    assert cb.is_connected(barbell)
    two_piece = cb.parse_edge_list("0 1\n1 2\n8 9\n")
    giant = cb.giant_component(two_piece)
    assert giant.node_count == 3
    assert cb.local_clustering(cb.generate("clique(4)"), 0) == 1.0


def test_centralities_on_known_shapes():
    star = cb.generate("star(6)")
    deg = cb.centrality_scores(star, "degree")
    assert deg.measure == "degree"
    assert deg.scores[0] == 5.0
    assert cb.centrality_scores(star, "betweenness").scores[0] == 10.0

    path = cb.generate("path(4)")
    assert cb.centrality_scores(path, "eccentricity").scores == [3, 2, 2, 3]
    assert cb.centrality_scores(path, "coreness").scores == [1, 1, 1, 1]

    # with every node as a pivot the sampled estimate is the exact score
    clique = cb.generate("clique(5)")
    exact = cb.centrality_scores(clique, "betweenness").scores
    assert cb.betweenness_approx(clique, 5, seed=3).scores == exact


def test_target_sets():
    g = cb.generate("star(20)")
    ts = cb.build_target_set(cb.centrality_scores(g, "degree"), 0.1)
    assert ts.members == [0, 1]  # hub plus lowest-id leaf on the tie
    assert not ts.minimize
    ecc = cb.build_target_set(cb.centrality_scores(g, "eccentricity"), 0.05)
    assert ecc.minimize
    assert ecc.members == [0]  # the hub is the only eccentricity-1 node


def test_crawl_and_curves():
    g = cb.generate("pa(150,3,4)")
    run = cb.run_crawl(g, "mod", seed=0, rng_seed=7)
    assert run.kind == "mod"
    assert sorted(run.trace) == list(range(150))

    again = cb.run_crawl(g, "mod", seed=0, rng_seed=7)
    assert again.trace == run.trace

    nodes = cb.node_coverage(run)
    assert nodes.metric == "nodes"
    assert nodes.measure is None
    assert len(nodes.values) == 150
    assert nodes.values[-1] == 1.0
    assert all(b >= a for a, b in zip(nodes.values, nodes.values[1:]))

    ts = cb.build_target_set(cb.centrality_scores(g, "degree"), 0.1)
    closed = cb.target_coverage(run, ts, "closed")
    observed = cb.target_coverage(run, ts, "observed")
    assert closed.measure == "degree"
    assert all(o >= c for o, c in zip(observed.values, closed.values))

    induced = cb.run_crawl(g, "bfs", seed=0, sample_edges="induced")
    assert sorted(induced.trace) == list(range(150))


def test_curve_algebra():
    a = cb.curve("nodes", [0.0, 1.0])
    b = cb.curve("nodes", [1.0, 1.0])
    avg = cb.average_curves([a, b])
    assert avg.values == [0.5, 1.0]
    assert cb.auc(avg) == 0.75
    assert math.isclose(cb.auc(a) + cb.auc(b), 2 * cb.auc(avg), rel_tol=1e-15)

    gaps = cb.gap_to_best({"x": a, "y": b})
    assert gaps["x"].values == [-1.0, 0.0]
    assert gaps["y"].values == [0.0, 0.0]


def test_experiment_from_config(tmp_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text(
        "graph = barbell(6,6)\n"
        "crawlers = mod, rc\n"
        "measures = degree\n"
        "seeds = 2\n"
        f"output-dir = {tmp_path / 'out'}\n"
    )
    result = cb.run_experiment_file(str(cfg))
    assert result["nodes"] == 12
    assert (tmp_path / "out" / "curves.csv").exists()
    aucs = result["auc"]["barbell(6,6)"]
    assert set(aucs) == {"mod", "rc"}
    assert 0.0 < aucs["mod"]["degree"] <= 1.0

    tally = cb.winner_tally(result["auc"])
    assert sum(tally["degree"].values()) >= 1
