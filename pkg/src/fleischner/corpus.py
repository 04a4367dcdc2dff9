"""Named reference embeddings and a random generator of cubic plane maps."""

from __future__ import annotations

import random
from importlib import resources
from typing import Mapping, Sequence

from .errors import BadParity, UnknownName
from .planar_map import PlaneMultigraph, build_map, check_class_G, split_face, subdivide_edge
from .pmg import parse_pmg

__all__ = ["NAMES", "named", "random_class_G", "map_from_ccw_neighbors"]

NAMES = ("theta", "k4", "prism", "cube", "tutte")


def map_from_ccw_neighbors(
    order: Mapping[int, Sequence[int]], outer: tuple[int, int]
) -> PlaneMultigraph:
    """Build a simple plane map from counterclockwise neighbor lists.

    Edges get ids 1, 2, ... in order of their sorted endpoint pairs; edge k
    owns dart 2k-1 at its smaller endpoint and dart 2k at the larger one.
    ``outer`` is a directed edge (u, v) whose dart marks the outer face.
    """
    pairs = sorted({(min(u, v), max(u, v)) for u in order for v in order[u]})
    dart_of: dict[tuple[int, int], int] = {}
    edges = {}
    for k, (u, v) in enumerate(pairs, start=1):
        dart_of[(u, v)] = 2 * k - 1
        dart_of[(v, u)] = 2 * k
        edges[k] = (2 * k - 1, 2 * k)
    rotation = {u: [dart_of[(u, v)] for v in order[u]] for u in order}
    return build_map(rotation, edges, dart_of[outer])


def named(name: str) -> PlaneMultigraph:
    """Load one of the shipped maps: theta, k4, prism, cube or tutte."""
    key = name.lower()
    if key not in NAMES:
        raise UnknownName(f"unknown corpus graph {name!r}; choose from {', '.join(NAMES)}")
    text = resources.files("fleischner.data").joinpath(f"{key}.pmg").read_text(encoding="utf-8")
    return parse_pmg(text)


def random_class_G(n_target: int, seed: int, allow_multi: bool = False) -> PlaneMultigraph:
    """Grow a random cubic 2-connected plane map with ``n_target`` vertices.

    Starts from the theta graph (``allow_multi``) or K4 and repeatedly picks a
    face and two edges on its walk, subdivides both and joins the two new
    vertices inside the face. In multigraph mode the two picks may hit the
    same edge, which plants a digon.
    """
    if n_target % 2:
        raise BadParity(f"cubic graphs have an even number of vertices, got {n_target}")
    if n_target < (2 if allow_multi else 4):
        raise BadParity(f"n_target={n_target} is below the starting graph")
    rng = random.Random(seed)
    pmap = named("theta" if allow_multi else "k4")
    while pmap.n_vertices < n_target:
        pmap = _expand(pmap, rng, allow_multi)
    report = check_class_G(pmap)
    assert report.member, report.failures
    return pmap


def _expand(pmap: PlaneMultigraph, rng: random.Random, allow_multi: bool) -> PlaneMultigraph:
    face = rng.choice(pmap.faces)
    walk = face.walk
    if allow_multi and rng.random() < 0.25:
        i = j = rng.randrange(len(walk))
    else:
        i, j = sorted(rng.sample(range(len(walk)), 2))
    before = (pmap.n_vertices, pmap.n_edges, pmap.n_faces)

    d1 = walk[i]
    e1 = pmap.edge_of(d1)
    # the first dart of e1 keeps its tail, so the dart leaving x along the walk
    # is the new half of the subdivided edge when d1 is the first dart
    pmap, x, _ = subdivide_edge(pmap, e1)
    out_x = _walk_dart_from(pmap, d1, x)
    if i == j:
        e_mid = pmap.edge_of(out_x)
        pmap, y, _ = subdivide_edge(pmap, e_mid)
        out_y = _walk_dart_from(pmap, out_x, y)
    else:
        d2 = walk[j]
        pmap, y, _ = subdivide_edge(pmap, pmap.edge_of(d2))
        out_y = _walk_dart_from(pmap, d2, y)
    pmap, _ = split_face(pmap, out_x, out_y)
    after = (pmap.n_vertices, pmap.n_edges, pmap.n_faces)
    assert after == (before[0] + 2, before[1] + 3, before[2] + 1), (before, after)
    assert pmap.euler_characteristic() == 2
    return pmap


def _walk_dart_from(pmap: PlaneMultigraph, d: int, x: int) -> int:
    """After subdividing the edge of walk dart ``d`` at ``x``, return the
    dart of the same face walk that leaves ``x``."""
    if pmap.tail(d) == x:
        return d
    nxt = pmap.succ(d)
    assert pmap.tail(nxt) == x
    return nxt
