"""Python interface to the Maker-Breaker edge-coloring game core."""

import json

from . import _core
from ._core import (
    BudgetExceeded,
    GamelabError,
    Graph,
    bob_wins,
    box_threshold,
    edge_distance,
    find_good_set,
    game_chromatic_index,
    generate,
    read_edge_list,
    solve,
    solve_boxgame,
    traverse_bob_strategy,
    write_edge_list,
)

__all__ = [
    "BudgetExceeded",
    "GamelabError",
    "Graph",
    "bob_wins",
    "box_threshold",
    "edge_distance",
    "find_good_set",
    "game_chromatic_index",
    "generate",
    "read_edge_list",
    "run_acceptance",
    "run_match",
    "solve",
    "solve_boxgame",
    "telemetry_summary",
    "traverse_bob_strategy",
    "write_edge_list",
]


def run_match(graph, *, keep_logs=False, **spec):
    """Seeded matches; returns the report as a dict, plus the JSON-lines logs if requested."""
    report, logs = _core.run_match(graph, keep_logs=keep_logs, **spec)
    report = json.loads(report)
    return (report, logs) if keep_logs else report


def telemetry_summary(graph, log, k, **cfg):
    """Telemetry summary of one recorded game given as JSON-lines text."""
    return json.loads(_core.telemetry_summary(graph, log, k, **cfg))


def run_acceptance(only=(), seed=None):
    """Acceptance criteria results as a list of dicts."""
    if seed is None:
        return _core.run_acceptance(list(only))
    return _core.run_acceptance(list(only), seed)
