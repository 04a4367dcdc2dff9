"""Rotation-system representation of loopless plane multigraphs.

A map is given by darts (half-edges). Every edge owns two twin darts, every
dart sits in the counterclockwise rotation of its tail vertex, and one dart
designates the outer face. Faces are orbits of the successor permutation

    succ(d) = the dart immediately before twin(d) in the rotation at head(d)

which traces inner faces counterclockwise and the outer face clockwise.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    BridgeEdge,
    ChordEndpointsEqual,
    CornerNotOnFace,
    DanglingDart,
    DartReused,
    Disconnected,
    LoopEdge,
    MapError,
    NotPlanarEmbedding,
    UnknownVertex,
)

__all__ = [
    "Dart",
    "Face",
    "PlaneMultigraph",
    "ClassReport",
    "build_map",
    "trace_faces",
    "check_class_G",
    "face_adjacency",
    "insert_chord",
    "split_face",
    "subdivide_edge",
    "delete_edge",
    "within_square",
    "degree",
    "components",
    "dist",
    "bfs_distances",
]


class Dart(NamedTuple):
    id: int
    tail: int
    edge: int


@dataclass(frozen=True)
class Face:
    id: int
    walk: tuple[int, ...]
    vertices: tuple[int, ...]
    is_outer: bool

    def __len__(self) -> int:
        return len(self.walk)


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    # rotate a cyclic sequence so that it starts at its smallest element
    if not seq:
        return ()
    i = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[i:]) + tuple(seq[:i])


class PlaneMultigraph:
    """An embedded loopless multigraph. Treat instances as immutable.

    Use :func:`build_map` to construct a validated instance.
    """

    def __init__(
        self,
        rotation: Mapping[int, Sequence[int]],
        edges: Mapping[int, tuple[int, int]],
        outer_dart: int,
    ):
        self.rotation: dict[int, tuple[int, ...]] = {
            v: _canonical_cycle(list(rotation[v])) for v in sorted(rotation)
        }
        self.edges: dict[int, tuple[int, int]] = {e: tuple(edges[e]) for e in sorted(edges)}
        self.outer_dart = outer_dart

        self._tail: dict[int, int] = {}
        self._pos: dict[int, int] = {}
        for v, darts in self.rotation.items():
            for i, d in enumerate(darts):
                self._tail[d] = v
                self._pos[d] = i
        self._edge_of: dict[int, int] = {}
        self._twin: dict[int, int] = {}
        for e, (a, b) in self.edges.items():
            self._edge_of[a] = e
            self._edge_of[b] = e
            self._twin[a] = b
            self._twin[b] = a
        self._faces: list[Face] | None = None
        self._face_of: dict[int, int] | None = None

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.rotation)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self.edges)

    @property
    def darts(self) -> tuple[int, ...]:
        return tuple(sorted(self._tail))

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def dart(self, d: int) -> Dart:
        return Dart(d, self._tail[d], self._edge_of[d])

    def tail(self, d: int) -> int:
        return self._tail[d]

    def head(self, d: int) -> int:
        return self._tail[self._twin[d]]

    def twin(self, d: int) -> int:
        return self._twin[d]

    def edge_of(self, d: int) -> int:
        return self._edge_of[d]

    def endpoints(self, e: int) -> tuple[int, int]:
        a, b = self.edges[e]
        return self._tail[a], self._tail[b]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.endpoints(e)
        return w if u == v else u

    def rot_next(self, d: int) -> int:
        darts = self.rotation[self._tail[d]]
        return darts[(self._pos[d] + 1) % len(darts)]

    def rot_prev(self, d: int) -> int:
        darts = self.rotation[self._tail[d]]
        return darts[(self._pos[d] - 1) % len(darts)]

    def succ(self, d: int) -> int:
        return self.rot_prev(self._twin[d])

    def pred(self, d: int) -> int:
        return self._twin[self.rot_next(d)]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self._require(v)
        return tuple(self._edge_of[d] for d in self.rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._require(v)
        return tuple(self.head(d) for d in self.rotation[v])

    def edges_between(self, u: int, v: int) -> list[int]:
        self._require(u)
        self._require(v)
        return sorted(self._edge_of[d] for d in self.rotation[u] if self.head(d) == v)

    def is_simple(self) -> bool:
        pairs = Counter(frozenset(self.endpoints(e)) for e in self.edges)
        return all(c == 1 for c in pairs.values())

    def has_vertex(self, v: int) -> bool:
        return v in self.rotation

    def _require(self, v: int) -> None:
        if v not in self.rotation:
            raise UnknownVertex(f"unknown vertex {v}")

    # -- faces -------------------------------------------------------------

    @property
    def faces(self) -> list[Face]:
        if self._faces is None:
            self._faces, self._face_of = _trace(self)
        return self._faces

    def face_of(self, d: int) -> Face:
        if self._face_of is None:
            self._faces, self._face_of = _trace(self)
        return self._faces[self._face_of[d]]

    @property
    def outer_face(self) -> Face:
        return self.face_of(self.outer_dart)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def copy_data(self) -> tuple[dict[int, list[int]], dict[int, tuple[int, int]]]:
        return {v: list(ds) for v, ds in self.rotation.items()}, dict(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneMultigraph):
            return NotImplemented
        return (
            self.rotation == other.rotation
            and self.edges == other.edges
            and self.outer_dart == other.outer_dart
        )

    def __hash__(self) -> int:
        return hash((tuple(self.rotation.items()), tuple(self.edges.items()), self.outer_dart))

    def __repr__(self) -> str:
        return (
            f"PlaneMultigraph(V={self.n_vertices}, E={self.n_edges}, "
            f"F={self.n_faces}, outer_dart={self.outer_dart})"
        )


def _trace(pmap: PlaneMultigraph) -> tuple[list[Face], dict[int, int]]:
    faces: list[Face] = []
    face_of: dict[int, int] = {}
    outer = pmap.outer_dart
    for start in pmap.darts:
        if start in face_of:
            continue
        fid = len(faces)
        walk = []
        d = start
        while d not in face_of:
            face_of[d] = fid
            walk.append(d)
            d = pmap.succ(d)
        # d must close the orbit at start since succ is a permutation
        walk_t = tuple(walk)
        faces.append(
            Face(
                id=fid,
                walk=walk_t,
                vertices=tuple(pmap.tail(x) for x in walk_t),
                is_outer=outer in walk_t,
            )
        )
    return faces, face_of


def trace_faces(pmap: PlaneMultigraph) -> list[Face]:
    """Return the facial walks, numbered in order of their smallest dart."""
    return list(pmap.faces)


def build_map(
    vertex_rotations: Mapping[int, Sequence[int]],
    edge_pairs: Mapping[int, tuple[int, int]],
    outer_dart: int,
) -> PlaneMultigraph:
    """Validate a rotation system and return the map it describes.

    Raises:
        DartReused: a dart appears twice in the rotations or edge pairs.
        DanglingDart: a dart is missing from the rotations or the edges.
        LoopEdge: both darts of an edge sit at the same vertex.
        Disconnected: the underlying graph is not connected.
        NotPlanarEmbedding: V - E + F != 2.
    """
    seen_rot: set[int] = set()
    for v, darts in vertex_rotations.items():
        for d in darts:
            if d in seen_rot:
                raise DartReused(f"dart {d} appears more than once in the rotations")
            seen_rot.add(d)
    seen_edge: set[int] = set()
    for e, pair in edge_pairs.items():
        if len(pair) != 2:
            raise MapError(f"edge {e} must have exactly two darts")
        for d in pair:
            if d in seen_edge:
                raise DartReused(f"dart {d} appears in more than one edge")
            seen_edge.add(d)
    if seen_rot != seen_edge:
        missing = sorted(seen_rot ^ seen_edge)
        raise DanglingDart(f"darts not present in both rotations and edges: {missing[:10]}")
    if outer_dart not in seen_rot:
        raise DanglingDart(f"outer dart {outer_dart} is not a dart of the map")
    if not vertex_rotations:
        raise MapError("map has no vertices")

    pmap = PlaneMultigraph(vertex_rotations, edge_pairs, outer_dart)
    for e in pmap.edges:
        u, v = pmap.endpoints(e)
        if u == v:
            raise LoopEdge(f"edge {e} is a loop at vertex {u}")
    if len(components(pmap)) != 1:
        raise Disconnected("the map is not connected")
    if pmap.euler_characteristic() != 2:
        raise NotPlanarEmbedding(
            f"V - E + F = {pmap.euler_characteristic()} (expected 2); rotation is not planar"
        )
    return pmap


@dataclass(frozen=True)
class ClassReport:
    """Membership of a map in the class of cubic 2-connected loopless plane multigraphs."""

    is_cubic: bool
    is_2connected: bool
    loopless: bool
    plane: bool
    failures: tuple[str, ...] = field(default=())

    @property
    def member(self) -> bool:
        return self.is_cubic and self.is_2connected and self.loopless and self.plane

    def __bool__(self) -> bool:
        return self.member


def _is_2connected(pmap: PlaneMultigraph) -> bool:
    verts = pmap.vertices
    if len(verts) == 1:
        return False
    if len(verts) == 2:
        return pmap.n_edges >= 2 and len(components(pmap)) == 1
    if len(components(pmap)) != 1:
        return False
    adj = {v: set(pmap.neighbors(v)) for v in verts}
    for cut in verts:
        rest = [v for v in verts if v != cut]
        start = rest[0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y != cut and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(rest):
            return False
    return True


def check_class_G(pmap: PlaneMultigraph) -> ClassReport:
    failures = []
    bad_deg = [v for v in pmap.vertices if degree(pmap, v) != 3]
    if bad_deg:
        failures.append(f"vertices of degree != 3: {bad_deg[:10]}")
    loops = [e for e in pmap.edges if len(set(pmap.endpoints(e))) == 1]
    if loops:
        failures.append(f"loop edges: {loops}")
    two_conn = _is_2connected(pmap)
    if not two_conn:
        failures.append("not 2-connected")
    plane = pmap.euler_characteristic() == 2
    if not plane:
        failures.append(f"Euler characteristic {pmap.euler_characteristic()}")
    return ClassReport(
        is_cubic=not bad_deg,
        is_2connected=two_conn,
        loopless=not loops,
        plane=plane,
        failures=tuple(failures),
    )


def face_adjacency(pmap: PlaneMultigraph) -> dict[int, tuple[int, int]]:
    """Map each edge to the ids of the faces on its two sides.

    The first entry is the face of the edge's first dart.
    """
    out = {}
    for e, (a, b) in pmap.edges.items():
        fa, fb = pmap.face_of(a).id, pmap.face_of(b).id
        if fa == fb:
            raise BridgeEdge(f"edge {e} has the same face on both sides")
        out[e] = (fa, fb)
    return out


def split_face(pmap: PlaneMultigraph, out1: int, out2: int) -> tuple[PlaneMultigraph, int]:
    """Join two corners of one face by a new edge drawn inside that face.

    A corner is named by the dart leaving it along the face walk. The new
    edge's darts go right after ``out1`` and ``out2`` in their rotations, so
    the face splits into the walk ``out1 .. pred(out2)`` closed by the new
    edge and the walk ``out2 .. pred(out1)`` closed by its twin.
    """
    if pmap.face_of(out1).id != pmap.face_of(out2).id:
        raise CornerNotOnFace(f"darts {out1} and {out2} are not on the same face")
    w1, w2 = pmap.tail(out1), pmap.tail(out2)
    if w1 == w2:
        raise ChordEndpointsEqual(f"chord would be a loop at vertex {w1}")
    rotation, edges = pmap.copy_data()
    top = max(pmap.darts)
    n1, n2 = top + 1, top + 2
    new_edge = max(pmap.edges) + 1
    rot1 = rotation[w1]
    rot1.insert(rot1.index(out1) + 1, n1)
    rot2 = rotation[w2]
    rot2.insert(rot2.index(out2) + 1, n2)
    edges[new_edge] = (n1, n2)
    new = PlaneMultigraph(rotation, edges, pmap.outer_dart)
    if new.euler_characteristic() != 2:
        raise NotPlanarEmbedding("chord insertion broke the Euler formula")
    return new, new_edge


def insert_chord(
    pmap: PlaneMultigraph, face: Face | int, dart: int, target_vertex: int
) -> tuple[PlaneMultigraph, int]:
    """Add the chord tail(dart) -- head(succ(dart)) inside ``face``.

    ``dart`` and its successor must lie on the face's walk and
    ``target_vertex`` must be the head of the successor. The face is cut
    into the triangle (tail, head, target) and a remainder.
    """
    fid = face.id if isinstance(face, Face) else face
    if dart not in pmap.face_of(dart).walk or pmap.face_of(dart).id != fid:
        raise CornerNotOnFace(f"dart {dart} is not on face {fid}")
    nxt = pmap.succ(dart)
    if pmap.head(nxt) != target_vertex:
        raise CornerNotOnFace(
            f"vertex {target_vertex} does not follow dart {dart} on face {fid}"
        )
    if pmap.tail(dart) == target_vertex:
        raise ChordEndpointsEqual(
            f"chord endpoints coincide at vertex {target_vertex}"
        )
    return split_face(pmap, dart, pmap.succ(nxt))


def subdivide_edge(pmap: PlaneMultigraph, e: int) -> tuple[PlaneMultigraph, int, int]:
    """Put a new vertex in the middle of edge ``e``.

    Returns ``(map, new_vertex, new_edge)``: ``e`` keeps its first dart and
    now ends at the new vertex, ``new_edge`` runs from the new vertex to the
    old head of that first dart.
    """
    a, b = pmap.edges[e]
    rotation, edges = pmap.copy_data()
    top = max(pmap.darts)
    x = max(pmap.vertices) + 1
    a2, b2 = top + 1, top + 2  # a2 at x opposite a, b2 at x opposite b
    new_edge = max(pmap.edges) + 1
    edges[e] = (a, a2)
    edges[new_edge] = (b2, b)
    rotation[x] = [a2, b2]
    return PlaneMultigraph(rotation, edges, pmap.outer_dart), x, new_edge


def delete_edge(pmap: PlaneMultigraph, e: int) -> PlaneMultigraph:
    """Remove edge ``e`` and its darts; the two faces beside it merge.

    The result is not re-validated, so it may be disconnected.
    """
    a, b = pmap.edges[e]
    if pmap.outer_dart in (a, b):
        raise MapError(f"edge {e} carries the outer dart")
    rotation, edges = pmap.copy_data()
    del edges[e]
    for d in (a, b):
        rotation[pmap.tail(d)].remove(d)
    return PlaneMultigraph(rotation, edges, pmap.outer_dart)


def degree(pmap: PlaneMultigraph, v: int) -> int:
    pmap._require(v)
    return len(pmap.rotation[v])


def components(
    pmap: PlaneMultigraph, edges: Iterable[int] | None = None
) -> list[list[int]]:
    """Connected components of the spanning subgraph with the given edges.

    With ``edges=None`` all edges of the map are used. Components are sorted
    vertex lists, ordered by their smallest vertex.
    """
    parent = {v: v for v in pmap.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in pmap.edges if edges is None else edges:
        u, v = pmap.endpoints(e)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in pmap.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: g[0])


def bfs_distances(pmap: PlaneMultigraph, source: int) -> dict[int, int]:
    pmap._require(source)
    out = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in pmap.neighbors(x):
            if y not in out:
                out[y] = out[x] + 1
                queue.append(y)
    return out


def dist(pmap: PlaneMultigraph, u: int, v: int) -> int:
    pmap._require(v)
    d = bfs_distances(pmap, u)
    if v not in d:
        raise Disconnected(f"no path between {u} and {v}")
    return d[v]


def within_square(pmap: PlaneMultigraph, u: int, v: int) -> bool:
    """True iff u and v are at distance 1 or 2 in the map."""
    return dist(pmap, u, v) in (1, 2)
