"""Local independence graphs for marked point processes."""

from ._core import (
    Graph,
    ModelError,
    ParseError,
    active_trail,
    delta_separated,
    export_dot,
    fixture_graph,
    fixture_names,
    local_statements,
    loglik,
    minimal_separators,
    moralize,
    pairwise_statements,
    parse_graph,
    run_fixtures,
    simulate_jsonl,
)

__all__ = [
    "Graph",
    "ModelError",
    "ParseError",
    "active_trail",
    "delta_separated",
    "export_dot",
    "fixture_graph",
    "fixture_names",
    "local_statements",
    "loglik",
    "minimal_separators",
    "moralize",
    "pairwise_statements",
    "parse_graph",
    "run_fixtures",
    "simulate_jsonl",
]
