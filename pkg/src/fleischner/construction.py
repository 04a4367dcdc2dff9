"""Build a plane graph J with G <= J <= G^2 and a Hamilton cycle of J that
avoids every edge of G outside a given 2-factor X.

Pipeline:

1. colour the faces of G with two colours so that the colour flips exactly
   across edges of X (:func:`color_faces`);
2. give every facial walk a direction read off its colour
   (:func:`assigned_walk`);
3. order the cycles of X so that each new cycle hangs off the grown part
   through one connecting edge ``b_i`` chosen inside a bond
   (:func:`order_components`);
4. around each connecting edge ``ab`` add the two chords ``ac`` and ``bd``
   that close a diamond (:func:`plan_and_insert_diamonds`);
5. splice the cycles together through the diamonds
   (:func:`assemble_hamilton`).
"""

from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    ChordEndpointsEqual,
    ChordParallelInSimple,
    ConstructionError,
    DiamondOverlap,
    DualDisconnectedOverX,
    EdgeNotPresentForRemoval,
    NoBondOrdering,
    NotInClass,
    ParityClash,
)
from .planar_map import (
    PlaneMultigraph,
    check_class_G,
    components,
    face_adjacency,
    insert_chord,
)
from .two_factor import Cycle, TwoFactor, validate_two_factor

__all__ = [
    "Color",
    "FaceColoring",
    "OrderingStep",
    "ComponentOrdering",
    "Diamond",
    "HamiltonCycle",
    "ConstructionResult",
    "color_faces",
    "assigned_walk",
    "is_bond",
    "order_components",
    "plan_and_insert_diamonds",
    "assemble_hamilton",
    "construct",
]

logger = logging.getLogger(__name__)


class Color(str, enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"

    @property
    def other(self) -> "Color":
        return Color.BETA if self is Color.ALPHA else Color.ALPHA


@dataclass(frozen=True)
class FaceColoring:
    """Two-colouring of the faces of G, keyed by face id.

    ``reversed[f]`` is true when the assigned direction of face ``f`` runs
    against its traced direction, which happens exactly for ALPHA faces.
    """

    color: dict[int, Color]
    reversed: dict[int, bool]


@dataclass(frozen=True)
class OrderingStep:
    grown: frozenset[int]  # vertex set of S_i
    component: int  # index into TwoFactor.components of C_{i+1}
    bond: frozenset[int]
    edge: int  # b_i


@dataclass(frozen=True)
class ComponentOrdering:
    order: tuple[int, ...]
    steps: tuple[OrderingStep, ...]
    backtracks: int = 0

    @property
    def M(self) -> tuple[int, ...]:
        return tuple(s.edge for s in self.steps)


@dataclass(frozen=True)
class Diamond:
    """The four vertices around a connecting edge ``ab``.

    ``a, b, c`` are consecutive on the assigned walk of one flanking face and
    ``b, a, d`` on the other. ``e0`` holds the ids of ab, bc, ad (edges of G)
    and ``e1`` those of the chords ac, bd.
    """

    m_edge: int
    a: int
    b: int
    c: int
    d: int
    e0: tuple[int, int, int]
    e1: tuple[int, int]
    type: Color
    faces: tuple[int, int]

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def endpoints(self) -> dict[int, tuple[int, int]]:
        ab, bc, ad = self.e0
        ac, bd = self.e1
        return {
            ab: (self.a, self.b),
            bc: (self.b, self.c),
            ad: (self.a, self.d),
            ac: (self.a, self.c),
            bd: (self.b, self.d),
        }


@dataclass(frozen=True)
class HamiltonCycle:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class ConstructionResult:
    G: PlaneMultigraph
    X: TwoFactor
    J: PlaneMultigraph
    H: HamiltonCycle
    diamonds: list[Diamond]
    coloring: FaceColoring
    ordering: ComponentOrdering
    metrics: dict[str, int] = field(default_factory=dict)


# -- face colouring ---------------------------------------------------------


def color_faces(
    pmap: PlaneMultigraph, X: TwoFactor, root_color: Color = Color.ALPHA
) -> FaceColoring:
    """Colour faces so that exactly the X-edges separate differently coloured faces.

    Breadth-first search over the dual, crossing only X-edges and flipping
    the colour at each crossing, rooted at the outer face.

    Raises:
        DualDisconnectedOverX: some face is unreachable across X-edges.
        ParityClash: an X-edge joins equal colours or a non-X edge joins
            different ones.
    """
    sides = face_adjacency(pmap)
    across: dict[int, list[int]] = {f.id: [] for f in pmap.faces}
    for e in sorted(X.edges):
        f, g = sides[e]
        across[f].append(g)
        across[g].append(f)
    root = pmap.outer_face.id
    color = {root: root_color}
    queue = deque([root])
    while queue:
        f = queue.popleft()
        for g in across[f]:
            if g not in color:
                color[g] = color[f].other
                queue.append(g)
    if len(color) != len(across):
        missing = sorted(set(across) - set(color))
        raise DualDisconnectedOverX(f"faces {missing} not reachable across X-edges")
    for e, (f, g) in sides.items():
        same = color[f] == color[g]
        if (e in X.edges) == same:
            kind = "X-edge" if e in X.edges else "non-X edge"
            raise ParityClash(f"{kind} {e} between faces {f} ({color[f].value}) and {g} ({color[g].value})")
    return FaceColoring(
        color=dict(sorted(color.items())),
        reversed={f: c is Color.ALPHA for f, c in sorted(color.items())},
    )


def assigned_walk(pmap: PlaneMultigraph, coloring: FaceColoring, face: int) -> tuple[int, ...]:
    """Darts of the facial walk of ``face`` in its assigned direction.

    Unreversed faces keep the traced walk. Reversed faces run backwards, so
    their darts are the twins of the traced ones; read vertices with
    ``pmap.tail``.
    """
    walk = pmap.faces[face].walk
    if not coloring.reversed[face]:
        return walk
    return tuple(pmap.twin(d) for d in reversed(walk))


# -- bonds and the component ordering ----------------------------------------


def is_bond(pmap: PlaneMultigraph, B) -> bool:
    """True iff removing ``B`` leaves exactly two components and every edge
    of ``B`` runs between them."""
    B = set(B)
    if not B:
        return False
    comps = components(pmap, (e for e in pmap.edges if e not in B))
    if len(comps) != 2:
        return False
    side = {v: i for i, c in enumerate(comps) for v in c}
    return all(side[u] != side[v] for u, v in map(pmap.endpoints, B))


def _reach_outside(pmap: PlaneMultigraph, start: int, blocked: set[int]) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in pmap.neighbors(x):
            if y not in blocked and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def order_components(pmap: PlaneMultigraph, X: TwoFactor) -> ComponentOrdering:
    """Order the cycles of X so that each one hangs off the grown part by a bond.

    ``C_1`` is the cycle through the lowest vertex. At step i the next cycle
    is taken next to the most recently added cycle that still has an
    unplaced neighbour (lowest cycle index first), i.e. in depth-first
    order. ``B_i`` is the bond ``E[S_i, K]`` where ``K`` is the component of
    ``G - V(S_i)`` holding the new cycle, and ``b_i`` is the lowest edge from
    ``S_i`` to the new cycle that lies in no earlier bond, so ``b_i`` is the
    only connecting edge in ``B_i``. Failed branches are retried with the
    next candidate; the number of retries is reported as ``backtracks``.

    Raises:
        NoBondOrdering: no ordering exists under these rules.
    """
    comps = X.components
    comp_of = X.component_of()
    n = len(comps)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in pmap.edges:
        u, v = pmap.endpoints(e)
        cu, cv = comp_of[u], comp_of[v]
        if cu != cv:
            nbrs[cu].add(cv)
            nbrs[cv].add(cu)

    backtracks = 0
    order = [0]
    steps: list[OrderingStep] = []
    grown: set[int] = set(comps[0].vertices)

    def candidates():
        placed = set(order)
        for pos in range(len(order) - 1, -1, -1):
            for target in sorted(nbrs[order[pos]] - placed):
                yield target

    def search() -> bool:
        nonlocal backtracks
        if len(order) == n:
            return True
        tried = set()
        for target in candidates():
            if target in tried:
                continue
            tried.add(target)
            earlier = set().union(*(s.bond for s in steps))
            links = sorted(
                e
                for e in pmap.edges
                if e not in earlier and _crosses(pmap, e, grown, comps[target].vertices)
            )
            if not links:
                continue
            K = _reach_outside(pmap, comps[target].vertices[0], grown)
            bond = frozenset(
                e for e in pmap.edges if _crosses(pmap, e, grown, K)
            )
            b = links[0]
            if not is_bond(pmap, bond):
                continue
            step = OrderingStep(frozenset(grown), target, bond, b)
            steps.append(step)
            order.append(target)
            added = set(comps[target].vertices)
            grown.update(added)
            if search():
                return True
            backtracks += 1
            grown.difference_update(added)
            order.pop()
            steps.pop()
        return False

    if not search():
        raise NoBondOrdering("no bond-respecting ordering of the 2-factor components")
    if backtracks:
        logger.warning("component ordering needed %d backtracks", backtracks)
    return ComponentOrdering(tuple(order), tuple(steps), backtracks)


def _crosses(pmap: PlaneMultigraph, e: int, side_a, side_b) -> bool:
    u, v = pmap.endpoints(e)
    return (u in side_a and v in side_b) or (v in side_a and u in side_b)


# -- diamonds ---------------------------------------------------------------


@dataclass(frozen=True)
class _ChordPlan:
    face: int  # face id in G
    dart: int  # traced dart whose tail is one chord end
    target: int  # the other chord end, head of succ(dart)
    key: tuple[int, int]  # (m_edge, 0 for ac / 1 for bd)


def _plan_diamond(
    pmap: PlaneMultigraph, coloring: FaceColoring, m: int
) -> tuple[dict, list[_ChordPlan]]:
    dA, dB = pmap.edges[m]
    fA, fB = pmap.face_of(dA).id, pmap.face_of(dB).id
    if coloring.color[fA] != coloring.color[fB]:
        raise ParityClash(f"connecting edge {m} separates faces of different colours")
    a, b = pmap.tail(dA), pmap.head(dA)
    if not coloring.reversed[fA]:
        # traced walks: a->b->c on face(dA), b->a->d on face(dB)
        s1, s2 = pmap.succ(dA), pmap.succ(dB)
        c, d = pmap.head(s1), pmap.head(s2)
        bc, ad = pmap.edge_of(s1), pmap.edge_of(s2)
        plans = [_ChordPlan(fA, dA, c, (m, 0)), _ChordPlan(fB, dB, d, (m, 1))]
        f1, f2 = fA, fB
    else:
        # reversed faces: traced c->b->a on face(dB), d->a->b on face(dA)
        p1, p2 = pmap.pred(dB), pmap.pred(dA)
        c, d = pmap.tail(p1), pmap.tail(p2)
        bc, ad = pmap.edge_of(p1), pmap.edge_of(p2)
        plans = [_ChordPlan(fB, p1, a, (m, 0)), _ChordPlan(fA, p2, b, (m, 1))]
        f1, f2 = fB, fA
    if c == a or d == b:
        raise ChordEndpointsEqual(f"connecting edge {m} lies on a face of length 2")
    info = dict(m_edge=m, a=a, b=b, c=c, d=d, e0=(m, bc, ad), type=coloring.color[fA], faces=(f1, f2))
    return info, plans


def plan_and_insert_diamonds(
    pmap: PlaneMultigraph, coloring: FaceColoring, ordering: ComponentOrdering
) -> tuple[PlaneMultigraph, list[Diamond]]:
    """Insert the chords ``ac`` and ``bd`` for every connecting edge.

    Chords of one face go in along its assigned walk, each into the current
    remainder of the face, and the Euler formula is re-checked after every
    insertion.

    Raises:
        ChordEndpointsEqual, ChordParallelInSimple, DiamondOverlap,
        ConstructionError: a structural precondition of the splice fails.
    """
    M = ordering.M
    simple = pmap.is_simple()
    infos = {}
    per_face: dict[int, list[_ChordPlan]] = {}
    for m in M:
        info, plans = _plan_diamond(pmap, coloring, m)
        infos[m] = info
        for p in plans:
            per_face.setdefault(p.face, []).append(p)
        if simple:
            for u, w in ((info["a"], info["c"]), (info["b"], info["d"])):
                if pmap.edges_between(u, w):
                    raise ChordParallelInSimple(
                        f"chord {u}-{w} for connecting edge {m} duplicates an edge of G"
                    )
    Mset = set(M)
    for f in pmap.faces:
        if len(f) == 4 and sum(pmap.edge_of(d) in Mset for d in f.walk) > 1:
            raise ConstructionError(f"4-face {f.id} carries more than one connecting edge")

    used: dict[int, int] = {}
    for m, info in infos.items():
        for e in info["e0"]:
            if e in used:
                raise DiamondOverlap(f"edge {e} belongs to the diamonds of {used[e]} and {m}")
            used[e] = m

    J = pmap
    chord_id: dict[tuple[int, int], int] = {}
    for fid in sorted(per_face):
        walk = assigned_walk(pmap, coloring, fid)
        pos = {pmap.edge_of(d): i for i, d in enumerate(walk)}
        for p in sorted(per_face[fid], key=lambda p: pos[p.key[0]]):
            faces_before = J.n_faces
            J, new_edge = insert_chord(J, J.face_of(p.dart), p.dart, p.target)
            if J.n_faces != faces_before + 1 or J.euler_characteristic() != 2:
                raise ConstructionError(f"chord {new_edge} did not split face {fid} cleanly")
            chord_id[p.key] = new_edge

    diamonds = [
        Diamond(e1=(chord_id[(m, 0)], chord_id[(m, 1)]), **infos[m]) for m in M
    ]
    expected = pmap.n_edges + 2 * len(M)
    if J.n_edges != expected:
        raise ConstructionError(f"J has {J.n_edges} edges, expected {expected}")
    return J, diamonds


# -- Hamilton cycle ---------------------------------------------------------


def assemble_hamilton(
    ordering: ComponentOrdering, diamonds: list[Diamond], cycles: tuple[Cycle, ...]
) -> HamiltonCycle:
    """Splice the ordered cycles into one through their diamonds.

    Starting from ``C_1``, step i adds ``C_{i+1}``, drops the G-edges ``bc``
    and ``ad`` of the diamond at ``b_i`` (one from each side) and adds the
    chords ``ac`` and ``bd``.

    Raises:
        EdgeNotPresentForRemoval: ``bc``/``ad`` are not split between the
            grown cycle and the new one.
    """
    by_edge = {dm.m_edge: dm for dm in diamonds}
    first = cycles[ordering.order[0]]
    current = _cycle_edges(first)
    for step in ordering.steps:
        dm = by_edge[step.edge]
        new = _cycle_edges(cycles[step.component])
        _, bc, ad = dm.e0
        if not ((bc in current and ad in new) or (ad in current and bc in new)):
            raise EdgeNotPresentForRemoval(
                f"diamond at edge {dm.m_edge}: edges {bc} and {ad} are not split "
                "between the grown cycle and the new component"
            )
        current.update(new)
        del current[bc]
        del current[ad]
        ends = dm.endpoints()
        for chord in dm.e1:
            current[chord] = ends[chord]
    return _walk_cycle(current)


def _cycle_edges(c: Cycle) -> dict[int, tuple[int, int]]:
    k = len(c.vertices)
    return {e: (c.vertices[i], c.vertices[(i + 1) % k]) for i, e in enumerate(c.edges)}


def _walk_cycle(edges: dict[int, tuple[int, int]]) -> HamiltonCycle:
    incident: dict[int, list[int]] = {}
    for e in sorted(edges):
        for v in edges[e]:
            incident.setdefault(v, []).append(e)
    bad = [v for v, es in incident.items() if len(es) != 2]
    if bad:
        raise ConstructionError(f"spliced edge set is not 2-regular at {bad[:5]}")
    start = min(incident)
    verts, es = [start], []
    v, prev = start, None
    while True:
        e = next(x for x in incident[v] if x != prev)
        es.append(e)
        a, b = edges[e]
        w = b if a == v else a
        if w == start:
            break
        verts.append(w)
        v, prev = w, e
    if len(verts) != len(incident):
        raise ConstructionError(
            f"spliced edge set splits into several cycles ({len(verts)} of {len(incident)} vertices reached)"
        )
    return HamiltonCycle(tuple(verts), tuple(es))


# -- top level --------------------------------------------------------------


def construct(
    pmap: PlaneMultigraph,
    X: TwoFactor,
    root_color: Color = Color.ALPHA,
    check: bool = True,
) -> ConstructionResult:
    """Run the full pipeline and, with ``check``, the independent verifier.

    Raises:
        NotInClass: G is not cubic, 2-connected, loopless and plane.
        ConstructionError: any step fails or the verifier rejects the result.
    """
    report = check_class_G(pmap)
    if not report.member:
        raise NotInClass("; ".join(report.failures))
    X = validate_two_factor(pmap, X.edges)
    coloring = color_faces(pmap, X, root_color)
    ordering = order_components(pmap, X)
    J, diamonds = plan_and_insert_diamonds(pmap, coloring, ordering)
    H = assemble_hamilton(ordering, diamonds, X.components)
    metrics = {
        "vertices": pmap.n_vertices,
        "edges_g": pmap.n_edges,
        "edges_j": J.n_edges,
        "components_x": X.n,
        "max_degree_j": max(len(r) for r in J.rotation.values()),
        "diamonds": len(diamonds),
        "backtracks": ordering.backtracks,
    }
    result = ConstructionResult(pmap, X, J, H, diamonds, coloring, ordering, metrics)
    if check:
        from .verify import verify

        vr = verify(pmap, X, result)
        if not vr.passed:
            raise ConstructionError("verification failed: " + "; ".join(vr.diagnostics))
    return result
