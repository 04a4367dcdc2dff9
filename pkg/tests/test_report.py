from __future__ import annotations

import json

from fleischner.construction import construct
from fleischner.corpus import named
from fleischner.report import emit_report
from fleischner.two_factor import min_component_two_factor
from fleischner.verify import verify


def _run(G, X):
    r = construct(G, X)
    return json.loads(emit_report(verify(G, X, r), r.metrics)), emit_report(verify(G, X, r), r.metrics)


def test_prism_report(prism_triangles):
    data, _ = _run(*prism_triangles)
    assert (data["edges_g"], data["edges_j"], data["components_x"]) == (9, 11, 2)
    assert data["passed"] is True


def test_k4_report():
    G = named("k4")
    data, _ = _run(G, min_component_two_factor(G))
    assert (data["edges_g"], data["edges_j"], data["components_x"]) == (6, 6, 1)


def test_tutte_report():
    G = named("tutte")
    data, _ = _run(G, min_component_two_factor(G))
    assert (data["edges_g"], data["edges_j"]) == (69, 71)


def test_keys_sorted_and_types(cube_squares):
    data, text = _run(*cube_squares)
    assert list(data) == sorted(data)
    assert all(type(v) in (bool, int) for v in data.values())
    assert text.endswith("\n")
