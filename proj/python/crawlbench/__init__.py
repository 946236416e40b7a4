"""Benchmark harness for online network-crawling strategies.

Thin re-export of the compiled core; see the project README for the model
and the command-line interface.
"""

from crawlbench._core import (  # noqa: F401
    ConfigError,
    CoverageCurve,
    DataError,
    Graph,
    RunTrace,
    ScoreTable,
    TargetSet,
    auc,
    average_curves,
    betweenness_approx,
    build_target_set,
    centrality_scores,
    curve,
    gap_to_best,
    generate,
    giant_component,
    is_connected,
    load_edge_list,
    local_clustering,
    node_coverage,
    parse_edge_list,
    run_crawl,
    run_experiment_file,
    serialize_edge_list,
    target_coverage,
    winner_tally,
    __version__,
)

__all__ = [
    "ConfigError",
    "CoverageCurve",
    "DataError",
    "Graph",
    "RunTrace",
    "ScoreTable",
    "TargetSet",
    "auc",
    "average_curves",
    "betweenness_approx",
    "build_target_set",
    "centrality_scores",
    "curve",
    "gap_to_best",
    "generate",
    "giant_component",
    "is_connected",
    "load_edge_list",
    "local_clustering",
    "node_coverage",
    "parse_edge_list",
    "run_crawl",
    "run_experiment_file",
    "serialize_edge_list",
    "target_coverage",
    "winner_tally",
]
