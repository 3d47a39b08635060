import json
import math
import os
from pathlib import Path

import pytest

import ligraph

SOURCE = Path(os.environ.get("LIGRAPH_SOURCE_DIR", Path(__file__).resolve().parents[2]))


def home_visits():
    return ligraph.parse_graph((SOURCE / "fixtures" / "home_visits.graph.json").read_text())


def test_graph_round_trip():
    g = ligraph.Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert g.nodes == ["a", "b", "c"]
    assert ligraph.parse_graph(g.to_json()) == g
    assert g.parents(["c"]) == ["b"]
    assert g.ancestral_closure(["c"]) == ["a", "b", "c"]


def test_chain_separation_both_methods():
    g = ligraph.Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    for method in ("moral", "trail"):
        assert ligraph.delta_separated(g, ["a"], ["c"], ["b"], method=method)
        assert not ligraph.delta_separated(g, ["a"], ["c"], [], method=method)
    assert ligraph.active_trail(g, ["a"], ["c"]) == ["a", "b", "c"]
    assert ligraph.active_trail(g, ["a"], ["c"], ["b"]) is None


def test_bad_method_and_parse_errors():
    g = ligraph.Graph(["a", "b"], [("a", "b")])
    with pytest.raises(ValueError):
        ligraph.delta_separated(g, ["a"], ["b"], method="nope")
    with pytest.raises(ligraph.ParseError):
        ligraph.parse_graph('{"nodes": ["a"], "edges": [["a", "z"]]}')
    assert issubclass(ligraph.ParseError, ValueError)


def test_fixtures_pass():
    checked, failed = ligraph.run_fixtures()
    assert checked >= 9 and failed == 0
    assert "home_visits" in ligraph.fixture_names()
    assert ligraph.fixture_graph("home_visits") == home_visits()


def test_statements_and_moralization():
    g = home_visits()
    local = ligraph.local_statements(g)
    assert local and all(ligraph.delta_separated(g, s["a"], s["b"], s["c"]) for s in local)
    moral = ligraph.moralize(g)
    assert set(moral) == {"edges", "marriage"}
    assert "digraph" in ligraph.export_dot(g)


def test_simulate_and_loglik():
    g = home_visits()
    model = (SOURCE / "fixtures" / "home_visits.model.json").read_text()
    text = ligraph.simulate_jsonl(g, model, horizon=10.0, seed=7, replicates=20)
    assert text == ligraph.simulate_jsonl(g, model, horizon=10.0, seed=7, replicates=20)
    headers = [json.loads(line) for line in text.splitlines() if "tau" in json.loads(line)]
    assert len(headers) == 20 and all(h["seed"] == 7 for h in headers)
    values = ligraph.loglik(g, model, text)
    assert len(values) == 20 and all(v is not None and math.isfinite(v) for v in values)


def test_minimal_separators_chain():
    g = ligraph.Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert ligraph.minimal_separators(g, ["a"], ["c"]) == [["b"]]
