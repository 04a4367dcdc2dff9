"""Brute-force ground truth for small instances.

These routines share no code with the construction: Hamilton cycles come
from plain backtracking, bonds from simple cycles of the dual multigraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import SizeLimit
from .planar_map import PlaneMultigraph

__all__ = [
    "hamilton_search",
    "bonds_via_dual_cycles",
    "cuts_by_bipartition",
    "CrossCheckReport",
    "cross_check",
]

EdgeList = Sequence[tuple[int, int]] | Sequence[tuple[int, int, int]]


def _edge_triples(graph) -> tuple[list[int], list[tuple[int, int, int]]]:
    if isinstance(graph, PlaneMultigraph):
        return list(graph.vertices), [(e, *graph.endpoints(e)) for e in graph.edges]
    triples = []
    for k, item in enumerate(graph):
        if len(item) == 2:
            triples.append((k, item[0], item[1]))
        else:
            triples.append(tuple(item))
    verts = sorted({v for _, u, w in triples for v in (u, w)})
    return verts, triples


def hamilton_search(
    graph: PlaneMultigraph | EdgeList,
    forbidden_edges: Iterable[int] = (),
    max_vertices: int = 20,
) -> list[int] | None:
    """Find a Hamilton cycle avoiding ``forbidden_edges`` by backtracking.

    ``graph`` is a map or a list of ``(u, v)`` / ``(edge_id, u, v)``
    tuples (plain pairs get their list index as id). Returns the cycle as a
    vertex list, or ``None`` if none exists.

    Raises:
        SizeLimit: more than ``max_vertices`` vertices.
    """
    verts, triples = _edge_triples(graph)
    if len(verts) > max_vertices:
        raise SizeLimit(f"{len(verts)} vertices exceeds the Hamilton search bound {max_vertices}")
    if len(verts) < 2:
        return None
    forbidden = set(forbidden_edges)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in verts}
    for e, u, w in triples:
        if e in forbidden or u == w:
            continue
        adj[u].append((w, e))
        adj[w].append((u, e))
    for v in adj:
        adj[v].sort()
    if any(len(a) < 2 for a in adj.values()):
        return None

    start = verts[0]
    path = [start]
    used_edges: list[int] = []
    on_path = {start}
    n = len(verts)

    def feasible() -> bool:
        # every vertex off the path still needs two usable neighbours
        ends = {path[-1], start}
        for v in verts:
            if v in on_path:
                continue
            ok = sum(1 for w, _ in adj[v] if w not in on_path or w in ends)
            if ok < 2:
                return False
        return True

    def rec() -> bool:
        cur = path[-1]
        if len(path) == n:
            return any(w == start and e not in used_edges for w, e in adj[cur])
        for w, e in adj[cur]:
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            used_edges.append(e)
            if feasible() and rec():
                return True
            path.pop()
            on_path.discard(w)
            used_edges.pop()
        return False

    return list(path) if rec() else None


def bonds_via_dual_cycles(pmap: PlaneMultigraph, max_faces: int = 16) -> list[frozenset[int]]:
    """Every bond, as the primal edges crossed by a simple cycle of the dual.

    Sorted by size, then by sorted edge ids.

    Raises:
        SizeLimit: more than ``max_faces`` faces.
    """
    faces = pmap.faces
    if len(faces) > max_faces:
        raise SizeLimit(f"{len(faces)} faces exceeds the bond enumeration bound {max_faces}")
    dual: dict[int, list[tuple[int, int]]] = {f.id: [] for f in faces}
    found: set[frozenset[int]] = set()
    for e, (a, b) in pmap.edges.items():
        f, g = pmap.face_of(a).id, pmap.face_of(b).id
        if f == g:
            found.add(frozenset({e}))  # a bridge is a dual loop
            continue
        dual[f].append((g, e))
        dual[g].append((f, e))

    for s in sorted(dual):
        stack_faces = [s]
        stack_edges: list[int] = []

        def rec(cur: int) -> None:
            for nxt, e in dual[cur]:
                if e in stack_edges:
                    continue
                if nxt == s:
                    found.add(frozenset(stack_edges + [e]))
                elif nxt > s and nxt not in stack_faces:
                    stack_faces.append(nxt)
                    stack_edges.append(e)
                    rec(nxt)
                    stack_faces.pop()
                    stack_edges.pop()

        rec(s)
    return sorted(found, key=lambda b: (len(b), sorted(b)))


def cuts_by_bipartition(pmap: PlaneMultigraph, max_vertices: int = 16) -> list[frozenset[int]]:
    """Every distinct nonempty edge cut ``E[A, V - A]``, by brute force over A."""
    verts = list(pmap.vertices)
    if len(verts) > max_vertices:
        raise SizeLimit(f"{len(verts)} vertices exceeds the bipartition bound {max_vertices}")
    first, rest = verts[0], verts[1:]
    ends = {e: pmap.endpoints(e) for e in pmap.edges}
    cuts = set()
    for r in range(len(rest)):
        for combo in combinations(rest, r):
            side = {first, *combo}
            cut = frozenset(e for e, (u, v) in ends.items() if (u in side) != (v in side))
            if cut:
                cuts.add(cut)
    return sorted(cuts, key=lambda b: (len(b), sorted(b)))


@dataclass
class CrossCheckReport:
    bonds_agree: bool = False
    ordering_bonds_listed: bool = False
    even_bonds_in_x: bool = False
    hamilton_found: bool = False
    hamilton_accepted: bool = False
    n_bonds: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.bonds_agree
            and self.ordering_bonds_listed
            and self.even_bonds_in_x
            and self.hamilton_found
            and self.hamilton_accepted
        )


def cross_check(pmap: PlaneMultigraph, X, max_vertices: int = 16) -> CrossCheckReport:
    """Compare the construction with the brute-force engines on a small map.

    (a) ``is_bond`` agrees with dual-cycle bonds on every bipartition cut and
    every ordering bond is a dual-cycle bond; (b) every bond inside X has
    even size; (c) Hamilton search on J finds a cycle avoiding the edges
    outside X, and the construction's cycle passes ``check_hamilton``.
    """
    from .construction import construct, is_bond
    from .verify import check_hamilton

    if pmap.n_vertices > max_vertices:
        raise SizeLimit(f"{pmap.n_vertices} vertices exceeds the cross-check bound {max_vertices}")
    rep = CrossCheckReport()
    x_edges = frozenset(X.edges)
    bonds = bonds_via_dual_cycles(pmap)
    bond_set = set(bonds)
    rep.n_bonds = len(bonds)

    agree = all(is_bond(pmap, b) for b in bonds)
    for cut in cuts_by_bipartition(pmap, max_vertices):
        if is_bond(pmap, cut) != (cut in bond_set):
            agree = False
            rep.notes.append(f"is_bond disagrees with the dual cycles on cut {sorted(cut)}")
    rep.bonds_agree = agree

    odd = [sorted(b) for b in bonds if b <= x_edges and len(b) % 2]
    rep.even_bonds_in_x = not odd
    if odd:
        rep.notes.append(f"odd bonds inside X: {odd[:3]}")

    result = construct(pmap, X)
    missing = [s.bond for s in result.ordering.steps if s.bond not in bond_set]
    rep.ordering_bonds_listed = not missing
    if missing:
        rep.notes.append(f"{len(missing)} ordering bonds not found among dual cycles")

    forbidden = set(pmap.edges) - x_edges
    rep.hamilton_found = hamilton_search(result.J, forbidden, max_vertices) is not None
    rep.hamilton_accepted = check_hamilton(result.J, result.H.vertices, forbidden)
    return rep
