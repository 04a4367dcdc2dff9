"""Independent checks of a construction result.

Faces, distances, components and bonds are recomputed from the maps
themselves; a colouring or ordering handed over by the construction is
checked against them rather than assumed. The same
checks run on externally supplied ``(G, X, J, H)`` through
:func:`verify_certificate`, which rebuilds the diamonds from the chords of J.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field, fields
from typing import Iterable, Sequence

from .planar_map import PlaneMultigraph, check_class_G

__all__ = [
    "VerificationReport",
    "MANDATORY",
    "verify",
    "verify_certificate",
    "check_hamilton",
]

MANDATORY = (
    "class_G",
    "two_factor_valid",
    "coloring_condition1",
    "opposite_traversal",
    "bonds_valid",
    "condition2_facial",
    "condition3",
    "condition4",
    "diamonds_per_vertex_le2",
    "euler_J",
    "within_square",
    "edge_count_formula",
    "max_degree_le5",
    "hamilton_valid",
    "omits_matching",
    "simplicity_preserved",
)


@dataclass
class VerificationReport:
    """One boolean per checked claim plus human-readable diagnostics.

    ``condition2_facial``: no connecting edge lies on a 2- or 3-cycle and
    every chord joins distinct vertices, non-adjacent in G when G is
    simple. ``condition3``: no 4-face carries two connecting edges.
    ``condition4``: diamonds are edge-disjoint. ``square_strict`` is informational and not part of
    :attr:`passed`.
    """

    class_G: bool = False
    two_factor_valid: bool = False
    coloring_condition1: bool = False
    opposite_traversal: bool = False
    bonds_valid: bool = False
    condition2_facial: bool = False
    condition3: bool = False
    condition4: bool = False
    diamonds_per_vertex_le2: bool = False
    euler_J: bool = False
    within_square: bool = False
    square_strict: bool = False  # informational only
    edge_count_formula: bool = False
    max_degree_le5: bool = False
    hamilton_valid: bool = False
    omits_matching: bool = False
    simplicity_preserved: bool = False
    diagnostics: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(getattr(self, name) for name in MANDATORY)

    def flags(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "diagnostics"}

    def failed(self) -> list[str]:
        return [name for name in MANDATORY if not getattr(self, name)]


@dataclass(frozen=True)
class _DiamondView:
    m_edge: int
    a: int
    b: int
    c: int
    d: int
    edges: frozenset[int]  # the three G-edges and the two chords


# -- helpers that deliberately avoid construction code ----------------------


def _adjacency(pmap: PlaneMultigraph, skip: Iterable[int] = ()) -> dict[int, list[int]]:
    skip = set(skip)
    adj: dict[int, list[int]] = {v: [] for v in pmap.rotation}
    for e, (da, db) in pmap.edges.items():
        if e in skip:
            continue
        u, v = pmap.tail(da), pmap.tail(db)
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _labels(adj: dict[int, list[int]]) -> dict[int, int]:
    label: dict[int, int] = {}
    for s in adj:
        if s in label:
            continue
        label[s] = s
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in label:
                    label[y] = s
                    queue.append(y)
    return label


def _bond(pmap: PlaneMultigraph, B: set[int]) -> bool:
    if not B:
        return False
    label = _labels(_adjacency(pmap, B))
    if len(set(label.values())) != 2:
        return False
    return all(label[u] != label[v] for u, v in map(pmap.endpoints, B))


def _distances(pmap: PlaneMultigraph, s: int) -> dict[int, int]:
    adj = _adjacency(pmap)
    out = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in out:
                out[y] = out[x] + 1
                queue.append(y)
    return out


def _faces(pmap: PlaneMultigraph) -> list[list[int]]:
    """Trace facial walks from the rotation alone."""
    seen: set[int] = set()
    out = []
    for start in sorted(pmap._tail):
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            t = pmap.twin(d)
            rot = pmap.rotation[pmap.tail(t)]
            d = rot[(rot.index(t) - 1) % len(rot)]
        out.append(walk)
    return out


def check_hamilton(
    J: PlaneMultigraph, H: Sequence[int], forbidden_edges: Iterable[int] = ()
) -> bool:
    """True iff ``H`` is a Hamilton cycle of J avoiding ``forbidden_edges``.

    Consecutive vertices must be joined by distinct allowed edges, so a
    2-cycle needs two parallel edges.
    """
    H = list(H)
    verts = set(J.rotation)
    if len(H) < 2 or len(H) != len(verts) or set(H) != verts or len(set(H)) != len(H):
        return False
    forbidden = set(forbidden_edges)
    available: Counter = Counter()
    for e in J.edges:
        if e not in forbidden:
            available[frozenset(J.endpoints(e))] += 1
    needed = Counter(frozenset((H[i], H[(i + 1) % len(H)])) for i in range(len(H)))
    return all(available[p] >= k for p, k in needed.items())


# -- the report -------------------------------------------------------------


def verify(G: PlaneMultigraph, X, result) -> VerificationReport:
    """Check every clause of the theorem on a :class:`ConstructionResult`."""
    x_edges = frozenset(X.edges if hasattr(X, "edges") else X)
    diamonds = [
        _DiamondView(dm.m_edge, dm.a, dm.b, dm.c, dm.d, frozenset(dm.e0) | frozenset(dm.e1))
        for dm in result.diamonds
    ]
    return _run(
        G,
        x_edges,
        result.J,
        list(result.H.vertices),
        h_edges=list(result.H.edges),
        diamonds=diamonds,
        coloring=result.coloring,
        ordering=result.ordering,
        components=[c.vertices for c in result.X.components],
    )


def verify_certificate(
    G: PlaneMultigraph, X: Iterable[int], J: PlaneMultigraph, H: Sequence[int]
) -> VerificationReport:
    """Check an externally supplied J and Hamilton cycle against G and X."""
    x_edges = frozenset(X)
    report_diag: list[str] = []
    diamonds = _infer_diamonds(G, x_edges, J, report_diag)
    rep = _run(G, x_edges, J, list(H), h_edges=None, diamonds=diamonds, coloring=None,
               ordering=None, components=None)
    rep.diagnostics[:0] = report_diag
    if report_diag:
        rep.condition4 = False
    return rep


def _infer_diamonds(
    G: PlaneMultigraph, x_edges: frozenset[int], J: PlaneMultigraph, diag: list[str]
) -> list[_DiamondView]:
    """Recover diamonds from the chords J - G.

    A chord ``ac`` of a diamond bounds the triangular face ``a b c`` of J
    whose other sides are the connecting edge ``ab`` and the X-edge ``bc``.
    Reading the triangle picks the right edge when ``bc`` has parallel
    copies. Chords without such a face fall back to any path
    ``chord end -- non-X edge -- X edge -- other chord end`` in G.
    """
    chords = [e for e in J.edges if e not in G.edges]
    triangles: dict[int, list[tuple[int, int, int]]] = {}
    for walk in _faces(J):
        if len(walk) != 3:
            continue
        es = [J.edge_of(d) for d in walk]
        for i, d in enumerate(walk):
            ch = es[i]
            if ch in G.edges:
                continue
            # walk: p -ch-> q -e1-> y -e2-> p
            p = J.tail(d)
            e1, e2 = es[(i + 1) % 3], es[(i + 2) % 3]
            if e1 in G.edges and e2 in G.edges:
                if e2 not in x_edges and e1 in x_edges:
                    triangles.setdefault(ch, []).append((e2, p, e1))
                elif e1 not in x_edges and e2 in x_edges:
                    triangles.setdefault(ch, []).append((e1, J.head(d), e2))

    slots: dict[tuple[int, int], tuple[int, int]] = {}  # (m_edge, chord end on m) -> (chord, X edge)
    for ch in chords:
        options = list(triangles.get(ch, ()))
        if not options:
            u, w = J.endpoints(ch)
            for p, q in ((u, w), (w, u)):
                if not G.has_vertex(p) or not G.has_vertex(q):
                    continue
                for e1 in G.incident_edges(p):
                    if e1 in x_edges:
                        continue
                    y = G.other_end(e1, p)
                    for e2 in G.incident_edges(y):
                        if e2 in x_edges and G.other_end(e2, y) == q:
                            options.append((e1, p, e2))
        for m, p, x in sorted(options):
            if (m, p) not in slots:
                slots[(m, p)] = (ch, x)
                break
        else:
            diag.append(f"chord {ch} matches no diamond position")
    out = []
    for m in sorted({k[0] for k in slots}):
        a, b = G.endpoints(m)
        if (m, a) not in slots or (m, b) not in slots:
            diag.append(f"connecting edge {m} has only one chord")
            continue
        (ac, bc), (bd, ad) = slots[(m, a)], slots[(m, b)]
        c = J.other_end(ac, a)
        d = J.other_end(bd, b)
        out.append(_DiamondView(m, a, b, c, d, frozenset({m, bc, ad, ac, bd})))
    return out


def _run(
    G: PlaneMultigraph,
    x_edges: frozenset[int],
    J: PlaneMultigraph,
    H: list[int],
    *,
    h_edges: list[int] | None,
    diamonds: list[_DiamondView],
    coloring,
    ordering,
    components,
) -> VerificationReport:
    rep = VerificationReport()
    diag = rep.diagnostics
    M = [dm.m_edge for dm in diamonds]
    Mset = set(M)
    non_x = set(G.edges) - x_edges

    cls = check_class_G(G)
    rep.class_G = cls.member
    diag.extend(f"G: {f}" for f in cls.failures)

    # 2-factor
    deg = Counter()
    for e in x_edges:
        if e not in G.edges:
            diag.append(f"X edge {e} is not an edge of G")
            continue
        for v in G.endpoints(e):
            deg[v] += 1
    rep.two_factor_valid = all(e in G.edges for e in x_edges) and all(
        deg[v] == 2 for v in G.rotation
    )
    if not rep.two_factor_valid:
        diag.append("X is not a 2-factor of G")
    x_label = _labels({v: [G.other_end(e, v) for e in G.incident_edges(v) if e in x_edges]
                       for v in G.rotation})
    n = len(set(x_label.values()))

    # face colouring and assigned directions
    g_faces = _faces(G)
    face_of = {d: i for i, w in enumerate(g_faces) for d in w}
    color = _own_coloring(G, x_edges, g_faces, face_of, diag) if coloring is None else dict(coloring.color)
    cond1 = len(color) == len(g_faces)
    if cond1:
        for e, (da, db) in G.edges.items():
            f, g = face_of[da], face_of[db]
            if f == g:
                cond1 = False
                diag.append(f"edge {e} has one face on both sides")
            elif (e in x_edges) == (color[f] == color[g]):
                cond1 = False
                diag.append(f"colouring violated at edge {e}")
    rep.coloring_condition1 = cond1

    if cond1:
        opposite = True
        for m in M:
            da, db = G.edges[m]
            # alpha faces run against their traced direction
            ta = G.tail(db) if color[face_of[da]] == "alpha" else G.tail(da)
            tb = G.tail(da) if color[face_of[db]] == "alpha" else G.tail(db)
            if ta == tb:
                opposite = False
                diag.append(f"connecting edge {m} traversed the same way by both faces")
        rep.opposite_traversal = opposite

    # bonds
    rep.bonds_valid = _check_bonds(G, x_edges, x_label, M, ordering, components, diag)

    # no 2- or 3-cycle through a connecting edge, and the chords are proper
    cond2 = True
    simple_g = G.is_simple()
    g_adj = {v: set(G.neighbors(v)) for v in G.rotation}
    for dm in diamonds:
        a, b = G.endpoints(dm.m_edge)
        if len(G.edges_between(a, b)) > 1 or (g_adj[a] - {b}) & (g_adj[b] - {a}):
            cond2 = False
            diag.append(f"connecting edge {dm.m_edge} lies on a cycle of length <= 3")
        if dm.c == dm.a or dm.d == dm.b:
            cond2 = False
        if simple_g and (dm.c in g_adj[dm.a] or dm.d in g_adj[dm.b]):
            cond2 = False
            diag.append(f"chord of diamond {dm.m_edge} joins G-adjacent vertices")
    rep.condition2_facial = cond2

    rep.condition3 = True
    for w in g_faces:
        if len(w) == 4 and sum(G.edge_of(d) in Mset for d in w) > 1:
            rep.condition3 = False
            diag.append("a 4-face holds two connecting edges")

    rep.condition4 = True
    for i, p in enumerate(diamonds):
        for q in diamonds[i + 1:]:
            if p.edges & q.edges:
                rep.condition4 = False
                diag.append(f"diamonds {p.m_edge} and {q.m_edge} share edges {sorted(p.edges & q.edges)}")
    per_vertex = Counter(v for dm in diamonds for v in {dm.a, dm.b, dm.c, dm.d})
    rep.diamonds_per_vertex_le2 = all(k <= 2 for k in per_vertex.values())
    if not rep.diamonds_per_vertex_le2:
        diag.append("a vertex lies in three or more diamonds")

    # J against G and G^2
    j_faces = _faces(J)
    rep.euler_J = len(J.rotation) - len(J.edges) + len(j_faces) == 2
    if not rep.euler_J:
        diag.append("J violates the Euler formula")
    sub = set(G.rotation) == set(J.rotation)
    for e in G.edges:
        if e not in J.edges or sorted(J.endpoints(e)) != sorted(G.endpoints(e)):
            sub = False
            diag.append(f"edge {e} of G missing from J")
            break
    if sub:
        g_darts = set(G._tail)
        for v in G.rotation:
            restricted = [d for d in J.rotation[v] if d in g_darts]
            if _cyclic_key(restricted) != _cyclic_key(list(G.rotation[v])):
                sub = False
                diag.append(f"J does not extend the rotation of G at vertex {v}")
                break
    in_square = sub
    strict = False
    if sub:
        dist = {v: _distances(G, v) for v in G.rotation}
        j_pairs = set()
        for e in J.edges:
            u, v = J.endpoints(e)
            j_pairs.add(frozenset((u, v)))
            if dist[u].get(v) not in (1, 2):
                in_square = False
                diag.append(f"edge {e} of J joins vertices at G-distance {dist[u].get(v)}")
        strict = any(
            frozenset((u, v)) not in j_pairs
            for u in G.rotation
            for v, k in dist[u].items()
            if k in (1, 2)
        )
    rep.within_square = in_square
    rep.square_strict = strict

    rep.edge_count_formula = len(J.edges) == len(G.edges) + 2 * n - 2
    if not rep.edge_count_formula:
        diag.append(f"|E(J)| = {len(J.edges)}, expected {len(G.edges) + 2 * n - 2}")
    rep.max_degree_le5 = max(len(r) for r in J.rotation.values()) <= 5
    rep.simplicity_preserved = (not G.is_simple()) or J.is_simple()

    rep.hamilton_valid = check_hamilton(J, H)
    omits = check_hamilton(J, H, forbidden_edges=non_x)
    if h_edges is not None:
        k = len(H)
        good = len(h_edges) == k and len(set(h_edges)) == k
        for i, e in enumerate(h_edges if good else []):
            if e not in J.edges or sorted(J.endpoints(e)) != sorted((H[i], H[(i + 1) % k])):
                good = False
        if not good:
            rep.hamilton_valid = False
            diag.append("H's edge ids do not trace its vertex sequence in J")
        omits = omits and not (set(h_edges) & non_x)
    rep.omits_matching = omits
    if not rep.hamilton_valid:
        diag.append("H is not a Hamilton cycle of J")
    if not omits:
        diag.append("H uses an edge of G outside X")
    return rep


def _cyclic_key(seq: list[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    i = seq.index(min(seq))
    return tuple(seq[i:] + seq[:i])


def _own_coloring(G, x_edges, g_faces, face_of, diag) -> dict[int, str]:
    sides: dict[int, list[tuple[int, bool]]] = {i: [] for i in range(len(g_faces))}
    for e, (da, db) in G.edges.items():
        f, g = face_of[da], face_of[db]
        sides[f].append((g, e in x_edges))
        sides[g].append((f, e in x_edges))
    root = face_of[G.outer_dart]
    parity = {root: 0}
    queue = deque([root])
    while queue:
        f = queue.popleft()
        for g, flip in sides[f]:
            if g not in parity:
                parity[g] = parity[f] ^ flip
                queue.append(g)
    return {f: ("alpha", "beta")[p] for f, p in parity.items()}


def _check_bonds(G, x_edges, x_label, M, ordering, components, diag) -> bool:
    ok = True
    comp_ids = sorted(set(x_label.values()))
    n = len(comp_ids)
    Mset = set(M)
    if len(M) != n - 1:
        diag.append(f"{len(M)} connecting edges for {n} components")
        return False
    # M must connect the components as a tree
    parent = {c: c for c in comp_ids}

    def find(c):
        while parent[c] != c:
            c = parent[c]
        return c

    for m in M:
        if m in x_edges:
            diag.append(f"connecting edge {m} belongs to X")
            return False
        u, v = (x_label[w] for w in G.endpoints(m))
        ru, rv = find(u), find(v)
        if ru == rv:
            diag.append(f"connecting edge {m} closes a cycle among components")
            return False
        parent[ru] = rv
    # the fundamental cut of every tree edge is a bond holding only that edge of M
    for m in M:
        tree = {c: set() for c in comp_ids}
        for t in M:
            if t != m:
                p, q = (x_label[w] for w in G.endpoints(t))
                tree[p].add(q)
                tree[q].add(p)
        start = x_label[G.endpoints(m)[0]]
        side = _labels(tree)
        side_a = {v for v in G.rotation if side[x_label[v]] == side[start]}
        cut = {e for e in G.edges if (G.endpoints(e)[0] in side_a) != (G.endpoints(e)[1] in side_a)}
        if not _bond(G, cut) or cut & Mset != {m} or cut & x_edges:
            ok = False
            diag.append(f"fundamental cut of connecting edge {m} is not a bond with one connecting edge")
    if ordering is not None:
        grown = set(components[ordering.order[0]])
        for i, step in enumerate(ordering.steps):
            new = set(components[step.component])
            B = set(step.bond)
            u, v = G.endpoints(step.edge)
            checks = [
                set(step.grown) == grown,
                not (new & grown),
                (u in grown and v in new) or (v in grown and u in new),
                step.edge in B,
                _bond(G, B),
                B & Mset == {step.edge},
                not (B & x_edges),
                all((G.endpoints(e)[0] in grown) != (G.endpoints(e)[1] in grown) for e in B),
            ]
            if not all(checks):
                ok = False
                diag.append(f"ordering step {i + 1} fails its bond conditions")
            grown |= new
        if grown != set(G.rotation):
            ok = False
            diag.append("ordering does not cover every vertex")
    return ok
