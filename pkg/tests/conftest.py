from __future__ import annotations

import pytest

from fleischner.corpus import named
from fleischner.planar_map import PlaneMultigraph, build_map
from fleischner.two_factor import TwoFactor, validate_two_factor


def x_by_pairs(pmap: PlaneMultigraph, pairs) -> TwoFactor:
    """2-factor made of the edges whose endpoint pairs are listed."""
    wanted = {frozenset(p) for p in pairs}
    return validate_two_factor(
        pmap, [e for e in pmap.edge_ids if frozenset(pmap.endpoints(e)) in wanted]
    )


def hexagon_of_digons() -> PlaneMultigraph:
    """Hexagon 1..6 with edges 12, 34 and 56 doubled.

    Edge ids: 1/2 are the outer/inner copies of 12, 4/5 of 34, 7/8 of 56;
    3 = 23, 6 = 45, 9 = 61. Edge k owns darts 2k-1 and 2k.
    """
    rotation = {
        1: [1, 3, 18],
        2: [5, 4, 2],
        3: [7, 9, 6],
        4: [11, 10, 8],
        5: [13, 15, 12],
        6: [17, 16, 14],
    }
    edges = {k: (2 * k - 1, 2 * k) for k in range(1, 10)}
    probe = build_map(rotation, edges, 1)
    outer = next(f for f in probe.faces if len(f) == 6 and 1 in {probe.edge_of(d) for d in f.walk})
    return build_map(rotation, edges, outer.walk[0])


@pytest.fixture
def prism_triangles():
    G = named("prism")
    return G, x_by_pairs(G, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])


@pytest.fixture
def cube_squares():
    G = named("cube")
    ring = lambda vs: [(vs[i], vs[(i + 1) % 4]) for i in range(4)]
    return G, x_by_pairs(G, ring([1, 2, 3, 4]) + ring([5, 6, 7, 8]))


@pytest.fixture
def hexagon():
    G = hexagon_of_digons()
    return G, x_by_pairs(G, [(1, 2), (3, 4), (5, 6)])


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def record(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, {})

    def _record(criterion: int, ok: bool, detail: str) -> None:
        lines[criterion] = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
