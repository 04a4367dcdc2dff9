"""Text formats: ``.pmg`` maps, cycle files and edge-id lists.

A ``.pmg`` file is line oriented::

    pmg 1
    # comment
    vertex <vid> darts <d1> <d2> ...   (counterclockwise rotation)
    edge <eid> <dartA> <dartB>
    outer <dart>
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .errors import MapError, PmgSyntaxError
from .planar_map import PlaneMultigraph, build_map

__all__ = [
    "parse_pmg",
    "emit_pmg",
    "read_pmg",
    "write_pmg",
    "parse_cycle",
    "emit_cycle",
    "parse_edge_list",
    "emit_edge_list",
]


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise PmgSyntaxError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_pmg(text: str) -> PlaneMultigraph:
    """Parse ``.pmg`` text into a validated map.

    Raises:
        PmgSyntaxError: malformed lines, with the offending line number.
        MapError: the content parses but is not a valid plane map.
    """
    rotations: dict[int, list[int]] = {}
    edges: dict[int, tuple[int, int]] = {}
    outer: int | None = None
    header_seen = False
    for lineno, tok in _content_lines(text):
        kind = tok[0]
        if not header_seen:
            if tok != ["pmg", "1"]:
                raise PmgSyntaxError("missing header 'pmg 1'", lineno)
            header_seen = True
            continue
        if kind == "vertex":
            if len(tok) < 3 or tok[2] != "darts":
                raise PmgSyntaxError("expected 'vertex <vid> darts <d...>'", lineno)
            vid = _ints(tok[1:2], lineno)[0]
            if vid in rotations:
                raise PmgSyntaxError(f"vertex {vid} declared twice", lineno)
            rotations[vid] = _ints(tok[3:], lineno)
        elif kind == "edge":
            if len(tok) != 4:
                raise PmgSyntaxError("expected 'edge <eid> <dartA> <dartB>'", lineno)
            eid, a, b = _ints(tok[1:], lineno)
            if eid in edges:
                raise PmgSyntaxError(f"edge {eid} declared twice", lineno)
            edges[eid] = (a, b)
        elif kind == "outer":
            if len(tok) != 2:
                raise PmgSyntaxError("expected 'outer <dart>'", lineno)
            if outer is not None:
                raise PmgSyntaxError("duplicate 'outer' line", lineno)
            outer = _ints(tok[1:], lineno)[0]
        else:
            raise PmgSyntaxError(f"unknown record {kind!r}", lineno)
    if not header_seen:
        raise PmgSyntaxError("empty file; missing header 'pmg 1'")
    if outer is None:
        raise PmgSyntaxError("missing 'outer' line")
    return build_map(rotations, edges, outer)


def emit_pmg(pmap: PlaneMultigraph) -> str:
    lines = ["pmg 1"]
    for v, darts in pmap.rotation.items():
        lines.append(f"vertex {v} darts " + " ".join(map(str, darts)))
    for e, (a, b) in pmap.edges.items():
        lines.append(f"edge {e} {a} {b}")
    lines.append(f"outer {pmap.outer_dart}")
    return "\n".join(lines) + "\n"


def read_pmg(path: str | Path) -> PlaneMultigraph:
    return parse_pmg(Path(path).read_text(encoding="utf-8"))


def write_pmg(pmap: PlaneMultigraph, path: str | Path) -> None:
    Path(path).write_text(emit_pmg(pmap), encoding="utf-8")


def parse_cycle(text: str) -> list[int]:
    """Parse ``cycle <v1> ... <vk>`` (the cycle closes implicitly)."""
    found = None
    for lineno, tok in _content_lines(text):
        if tok[0] != "cycle" or found is not None:
            raise PmgSyntaxError("expected a single 'cycle <v...>' line", lineno)
        found = _ints(tok[1:], lineno)
    if not found:
        raise PmgSyntaxError("no cycle found")
    return found


def emit_cycle(vertices: Sequence[int]) -> str:
    return "cycle " + " ".join(map(str, vertices)) + "\n"


def parse_edge_list(text: str) -> list[int]:
    """Whitespace separated edge ids; ``#`` starts a comment."""
    out: list[int] = []
    for lineno, tok in _content_lines(text):
        out.extend(_ints(tok, lineno))
    if len(set(out)) != len(out):
        raise MapError("duplicate edge id in edge list")
    return out


def emit_edge_list(edges: Iterable[int]) -> str:
    return " ".join(map(str, sorted(edges))) + "\n"
