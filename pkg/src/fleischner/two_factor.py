"""2-factors of cubic maps as complements of perfect matchings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

from .errors import DegreeViolation, LimitExceeded, MatchingNotPerfect, NotCubic
from .planar_map import PlaneMultigraph, components, degree

__all__ = [
    "Cycle",
    "TwoFactor",
    "Matching",
    "maximum_matching",
    "complement_two_factor",
    "validate_two_factor",
    "iter_perfect_matchings",
    "enumerate_perfect_matchings",
    "min_component_two_factor",
    "first_matching_two_factor",
    "default_two_factor",
    "DEFAULT_MAX_VERTICES",
]

DEFAULT_MAX_VERTICES = 60


@dataclass(frozen=True)
class Cycle:
    """A closed walk ``vertices[i] --edges[i]-- vertices[i+1]`` (indices mod k)."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class TwoFactor:
    edges: frozenset[int]
    components: tuple[Cycle, ...]

    @property
    def n(self) -> int:
        return len(self.components)

    def component_of(self) -> dict[int, int]:
        """Vertex -> index of its component."""
        return {v: i for i, c in enumerate(self.components) for v in c.vertices}


@dataclass(frozen=True)
class Matching:
    edges: frozenset[int]

    def covered(self, pmap: PlaneMultigraph) -> set[int]:
        return {v for e in self.edges for v in pmap.endpoints(e)}

    def is_matching(self, pmap: PlaneMultigraph) -> bool:
        ends = [v for e in self.edges for v in pmap.endpoints(e)]
        return len(ends) == len(set(ends))

    def is_perfect(self, pmap: PlaneMultigraph) -> bool:
        return self.is_matching(pmap) and len(self.edges) * 2 == pmap.n_vertices


def maximum_matching(pmap: PlaneMultigraph) -> Matching:
    """Maximum-cardinality matching; perfect for bridgeless cubic maps.

    Parallel edges are collapsed to their lowest id before running the
    blossom search, since a matching can use at most one edge of a bundle.
    """
    rep: dict[tuple[int, int], int] = {}
    for e in pmap.edges:
        u, v = sorted(pmap.endpoints(e))
        rep.setdefault((u, v), e)
    g = nx.Graph()
    g.add_nodes_from(pmap.vertices)
    g.add_edges_from(rep)
    mate = nx.max_weight_matching(g, maxcardinality=True)
    return Matching(frozenset(rep[tuple(sorted(p))] for p in mate))


def _cycles_of(pmap: PlaneMultigraph, edge_set: frozenset[int]) -> tuple[Cycle, ...]:
    incident: dict[int, list[int]] = {v: [] for v in pmap.vertices}
    for e in sorted(edge_set):
        for v in set(pmap.endpoints(e)):
            incident[v].append(e)
    seen: set[int] = set()
    cycles = []
    for start in pmap.vertices:
        if start in seen:
            continue
        verts = [start]
        es: list[int] = []
        seen.add(start)
        prev_edge = None
        v = start
        while True:
            e = next(x for x in incident[v] if x != prev_edge)
            es.append(e)
            w = pmap.other_end(e, v)
            if w == start:
                break
            verts.append(w)
            seen.add(w)
            prev_edge, v = e, w
        cycles.append(Cycle(tuple(verts), tuple(es)))
    return tuple(cycles)


def validate_two_factor(pmap: PlaneMultigraph, edge_set: Iterable[int]) -> TwoFactor:
    """Check that ``edge_set`` spans a 2-regular subgraph and split it into cycles.

    Raises:
        DegreeViolation: some vertex does not meet exactly two of the edges.
    """
    edges = frozenset(edge_set)
    unknown = [e for e in edges if e not in pmap.edges]
    if unknown:
        raise KeyError(f"unknown edge ids {sorted(unknown)}")
    deg = {v: 0 for v in pmap.vertices}
    for e in edges:
        for v in pmap.endpoints(e):
            deg[v] += 1
    for v in pmap.vertices:
        if deg[v] != 2:
            raise DegreeViolation(v, deg[v])
    return TwoFactor(edges, _cycles_of(pmap, edges))


def complement_two_factor(pmap: PlaneMultigraph, matching: Matching) -> TwoFactor:
    bad = [v for v in pmap.vertices if degree(pmap, v) != 3]
    if bad:
        raise NotCubic(f"vertices of degree != 3: {bad[:10]}")
    if not matching.is_perfect(pmap):
        raise MatchingNotPerfect(f"matching with {len(matching.edges)} edges is not perfect")
    return validate_two_factor(pmap, set(pmap.edges) - matching.edges)


def iter_perfect_matchings(pmap: PlaneMultigraph) -> Iterator[Matching]:
    """Yield every perfect matching in lexicographic order of sorted edge ids.

    Edges are decided in increasing id order and inclusion is tried first,
    which is exactly lexicographic order on the sorted id tuples.
    """
    order = list(pmap.edges)
    ends = [pmap.endpoints(e) for e in order]
    n = pmap.n_vertices
    if n % 2:
        return
    later: dict[int, list[int]] = {v: [] for v in pmap.vertices}
    for i, (u, v) in enumerate(ends):
        if u != v:
            later[u].append(i)
            later[v].append(i)
    covered = {v: False for v in pmap.vertices}
    chosen: list[int] = []

    def coverable_after(w: int, i: int) -> bool:
        return any(j > i and not covered[pmap.other_end(order[j], w)] for j in later[w])

    def rec(i: int) -> Iterator[Matching]:
        if 2 * len(chosen) == n:
            yield Matching(frozenset(chosen))
            return
        if i == len(order):
            return
        u, v = ends[i]
        if u != v and not covered[u] and not covered[v]:
            covered[u] = covered[v] = True
            chosen.append(order[i])
            yield from rec(i + 1)
            chosen.pop()
            covered[u] = covered[v] = False
        for w in (u, v):
            if not covered[w] and not coverable_after(w, i):
                return
        yield from rec(i + 1)

    yield from rec(0)


def _check_size(pmap: PlaneMultigraph, max_vertices: int | None) -> None:
    if max_vertices is not None and pmap.n_vertices > max_vertices:
        raise LimitExceeded(
            f"{pmap.n_vertices} vertices exceeds the enumeration bound of {max_vertices}"
        )


def enumerate_perfect_matchings(
    pmap: PlaneMultigraph,
    limit: int | None = None,
    max_vertices: int | None = DEFAULT_MAX_VERTICES,
) -> list[Matching]:
    """All perfect matchings, lexicographic by sorted edge ids.

    Raises:
        LimitExceeded: the map is above ``max_vertices`` or more than
            ``limit`` matchings exist.
    """
    _check_size(pmap, max_vertices)
    out = []
    for m in iter_perfect_matchings(pmap):
        if limit is not None and len(out) >= limit:
            raise LimitExceeded(f"more than {limit} perfect matchings")
        out.append(m)
    return out


class _CycleBoundedSearch:
    """Label every edge M (matching) or X (2-factor) with unit propagation.

    Each vertex needs one M-edge and two X-edges. The X-edges form paths and
    cycles; path ends are tracked so that a free edge which would close a
    cycle beyond ``max_cycles`` is forced into M. Edges are branched in id
    order, M first, so solutions come out in lexicographic order of their
    sorted M-edge ids.
    """

    def __init__(self, pmap: PlaneMultigraph, max_cycles: int, node_limit: int | None):
        self.pmap = pmap
        self.order = list(pmap.edges)
        self.ends = {e: pmap.endpoints(e) for e in self.order}
        self.inc = {v: pmap.incident_edges(v) for v in pmap.vertices}
        self.max_cycles = max_cycles
        self.node_limit = node_limit
        self.nodes = 0
        self.label: dict[int, str | None] = {e: None for e in self.order}
        self.m_count = {v: 0 for v in pmap.vertices}
        self.x_count = {v: 0 for v in pmap.vertices}
        self.other = {v: v for v in pmap.vertices}  # far end of the X-path at a path end
        self.size = {v: 1 for v in pmap.vertices}  # vertex count of the X-path at a path end
        self.closed = 0
        self.closed_vertices = 0
        self.trail: list[tuple] = []

    def _set_end(self, v: int, w: int, size: int) -> None:
        self.trail.append(("end", v, self.other[v], self.size[v]))
        self.other[v] = w
        self.size[v] = size

    def _may_close(self, v: int) -> bool:
        """Whether closing the X-path ending at ``v`` keeps the budget feasible."""
        if self.closed + 1 > self.max_cycles:
            return False
        if self.closed + 1 == self.max_cycles:
            return self.closed_vertices + self.size[v] == len(self.x_count)
        return True

    def _assign(self, e: int, lab: str, queue: list[int]) -> bool:
        self.label[e] = lab
        self.trail.append(("label", e))
        u, v = self.ends[e]
        cnt = self.m_count if lab == "M" else self.x_count
        cnt[u] += 1
        cnt[v] += 1
        queue.extend((u, v))
        if self.m_count[u] > 1 or self.m_count[v] > 1:
            return False
        if self.x_count[u] > 2 or self.x_count[v] > 2:
            return False
        if lab == "X":
            if u != v and self.other[u] == v and self.x_count[u] == 2:
                # u and v were the two ends of one path
                if not self._may_close(u):
                    return False
                self.closed += 1
                self.closed_vertices += self.size[u]
                self.trail.append(("closed", self.size[u]))
            else:
                a, b = self.other[u], self.other[v]
                total = self.size[u] + self.size[v]
                self._set_end(a, b, total)
                self._set_end(b, a, total)
                queue.extend((a, b))
        return True

    def _propagate(self, queue: list[int]) -> bool:
        while queue:
            v = queue.pop()
            free = [e for e in self.inc[v] if self.label[e] is None]
            if not free:
                if self.m_count[v] != 1 or self.x_count[v] != 2:
                    return False
                continue
            if self.m_count[v] == 1:
                forced = "X"
            elif self.x_count[v] == 2:
                forced = "M"
            elif len(free) == 1 and self.m_count[v] == 0:
                forced = "M"
            else:
                forced = None
            if forced is not None:
                for e in free:
                    if self.label[e] is None and not self._assign(e, forced, queue):
                        return False
                continue
            w = self.other[v]
            if w != v and self.x_count[v] == 1 and not self._may_close(v):
                for e in free:
                    if self.label[e] is None and w in self.ends[e]:
                        if not self._assign(e, "M", queue):
                            return False
        return True

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            item = self.trail.pop()
            if item[0] == "label":
                e = item[1]
                lab = self.label[e]
                u, v = self.ends[e]
                cnt = self.m_count if lab == "M" else self.x_count
                cnt[u] -= 1
                cnt[v] -= 1
                self.label[e] = None
            elif item[0] == "closed":
                self.closed -= 1
                self.closed_vertices -= item[1]
            else:
                _, v, old, size = item
                self.other[v] = old
                self.size[v] = size

    def first(self, lexicographic: bool = True) -> Matching | None:
        """The lexicographically first solution, or with ``lexicographic=False``
        any solution (found by extending X-paths first, which refutes
        infeasible budgets much faster)."""
        if self.pmap.n_vertices % 2:
            return None
        if not self._propagate(list(self.pmap.vertices)):
            return None
        self.lexicographic = lexicographic
        return self._search(0)

    def _pick(self, i: int) -> tuple[int, int]:
        while i < len(self.order) and self.label[self.order[i]] is not None:
            i += 1
        if self.lexicographic or i == len(self.order):
            return i, i
        for v, k in self.x_count.items():
            if k == 1:
                for e in self.inc[v]:
                    if self.label[e] is None:
                        return i, self.order.index(e)
        return i, i

    def _search(self, i: int) -> Matching | None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise LimitExceeded(f"search exceeded {self.node_limit} nodes")
        i, j = self._pick(i)
        if i == len(self.order):
            assert self.closed_vertices == len(self.x_count)
            return Matching(frozenset(e for e, lab in self.label.items() if lab == "M"))
        e = self.order[j]
        for lab in ("M", "X"):
            mark = len(self.trail)
            queue: list[int] = []
            if self._assign(e, lab, queue) and self._propagate(queue):
                found = self._search(i)
                if found is not None:
                    return found
            self._undo(mark)
        return None


def min_component_two_factor(
    pmap: PlaneMultigraph,
    limit: int | None = None,
    max_vertices: int | None = DEFAULT_MAX_VERTICES,
) -> TwoFactor:
    """A 2-factor with the fewest cycles.

    Ties go to the lexicographically smallest complementary matching (sorted
    edge ids). The bound on the cycle count is raised from 1 until a
    labelling exists. ``limit`` caps the search nodes per bound.

    Raises:
        LimitExceeded: the map is above ``max_vertices`` or the node budget
            runs out.
    """
    _check_size(pmap, max_vertices)
    bad = [v for v in pmap.vertices if degree(pmap, v) != 3]
    if bad:
        raise NotCubic(f"vertices of degree != 3: {bad[:10]}")
    for k in range(1, pmap.n_vertices // 2 + 1):
        if _CycleBoundedSearch(pmap, k, limit).first(lexicographic=False) is None:
            continue
        m = _CycleBoundedSearch(pmap, k, limit).first()
        assert m is not None
        return complement_two_factor(pmap, m)
    raise MatchingNotPerfect("the map has no perfect matching")


def first_matching_two_factor(pmap: PlaneMultigraph) -> TwoFactor:
    """The complement of the blossom maximum matching, with no minimisation."""
    return complement_two_factor(pmap, maximum_matching(pmap))


def default_two_factor(pmap: PlaneMultigraph, method: str | None = None) -> TwoFactor:
    """Pick a 2-factor by ``method`` (``"min-components"`` or ``"first-matching"``).

    With ``method=None`` the minimum-component search runs on maps up to
    :data:`DEFAULT_MAX_VERTICES` vertices and larger maps fall back to the
    first matching.
    """
    if method is None:
        method = "min-components" if pmap.n_vertices <= DEFAULT_MAX_VERTICES else "first-matching"
    if method == "min-components":
        return min_component_two_factor(pmap)
    if method == "first-matching":
        return first_matching_two_factor(pmap)
    raise ValueError(f"unknown 2-factor method {method!r}")
