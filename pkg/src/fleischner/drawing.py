"""DOT and SVG export of plane maps with highlighted edge classes."""

from __future__ import annotations

import math
import warnings
from typing import Iterable, Mapping

import numpy as np

from .errors import LayoutDegenerate
from .planar_map import PlaneMultigraph

__all__ = ["export_drawing", "barycentric_layout", "circular_layout"]

_CLASSES = ("X", "M", "chords", "H")

_SVG_STYLE = """
  .edge { stroke: #555; stroke-width: 1.2; fill: none; }
  .edge.x { stroke: #000; stroke-width: 3.2; }
  .edge.m { stroke: #c0392b; stroke-width: 1.8; }
  .edge.chord { stroke: #2c6fbb; stroke-width: 1.8; stroke-dasharray: 6 3; }
  .hpath { stroke: #2ecc71; stroke-width: 7; stroke-opacity: 0.45; fill: none; }
  .diamond { fill: #d3d3d3; fill-opacity: 0.6; stroke: none; }
  .vertex { fill: #fff; stroke: #000; stroke-width: 1; }
  text { font: 9px sans-serif; text-anchor: middle; dominant-baseline: central; }
"""


def circular_layout(pmap: PlaneMultigraph) -> dict[int, tuple[float, float]]:
    verts = pmap.vertices
    k = len(verts)
    return {
        v: (math.cos(2 * math.pi * i / k + math.pi / 2), math.sin(2 * math.pi * i / k + math.pi / 2))
        for i, v in enumerate(verts)
    }


def barycentric_layout(pmap: PlaneMultigraph) -> dict[int, tuple[float, float]]:
    """Pin the outer face to a regular polygon and put every other vertex at
    the average of its neighbours.

    Falls back to :func:`circular_layout` with a :class:`LayoutDegenerate`
    warning when the outer face has fewer than three distinct vertices or
    two vertices land on the same point.
    """
    outer: list[int] = []
    for v in pmap.outer_face.vertices:
        if v not in outer:
            outer.append(v)
    if len(outer) < 3:
        warnings.warn(LayoutDegenerate("outer face has fewer than 3 vertices"), stacklevel=2)
        return circular_layout(pmap)
    pos: dict[int, tuple[float, float]] = {}
    k = len(outer)
    for i, v in enumerate(outer):
        t = math.pi / 2 - 2 * math.pi * i / k
        pos[v] = (math.cos(t), math.sin(t))
    inner = [v for v in pmap.vertices if v not in pos]
    if inner:
        index = {v: i for i, v in enumerate(inner)}
        A = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for v in inner:
            i = index[v]
            for w in pmap.neighbors(v):
                A[i, i] += 1.0
                if w in index:
                    A[i, index[w]] -= 1.0
                else:
                    rhs[i] += pos[w]
        try:
            sol = np.linalg.solve(A, rhs)
        except np.linalg.LinAlgError:
            warnings.warn(LayoutDegenerate("singular barycentric system"), stacklevel=2)
            return circular_layout(pmap)
        for v in inner:
            pos[v] = (float(sol[index[v], 0]), float(sol[index[v], 1]))
    pts = np.array([pos[v] for v in pmap.vertices])
    gaps = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
    np.fill_diagonal(gaps, np.inf)
    if gaps.min() < 1e-6:
        warnings.warn(LayoutDegenerate("two vertices share a position"), stacklevel=2)
        return circular_layout(pmap)
    return pos


def _edge_classes(highlight: Mapping[str, Iterable[int]] | None) -> dict[int, list[str]]:
    out: dict[int, list[str]] = {}
    if not highlight:
        return out
    for key in _CLASSES:
        for e in highlight.get(key, ()):
            out.setdefault(e, []).append(key)
    return out


def _dot(pmap: PlaneMultigraph, highlight) -> str:
    classes = _edge_classes(highlight)
    lines = ["graph G {", "  node [shape=circle, fontsize=10];"]
    for v in pmap.vertices:
        lines.append(f"  {v};")
    for e in pmap.edges:
        u, v = pmap.endpoints(e)
        attrs = [f'id="e{e}"', f'label="{e}"']
        cls = classes.get(e, [])
        if "X" in cls:
            attrs.append("penwidth=3")
        if "M" in cls:
            attrs.append('color="red"')
        if "chords" in cls:
            attrs.extend(['style="dashed"', 'color="blue"'])
        if "H" in cls:
            attrs.append('class="hamilton"')
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _svg(pmap: PlaneMultigraph, highlight, size: int = 480) -> str:
    pos = barycentric_layout(pmap)
    margin = 24
    scale = (size - 2 * margin) / 2

    def xy(v: int) -> tuple[float, float]:
        x, y = pos[v]
        return margin + (x + 1) * scale, margin + (1 - y) * scale

    classes = _edge_classes(highlight)
    bundles: dict[frozenset, list[int]] = {}
    for e in pmap.edges:
        bundles.setdefault(frozenset(pmap.endpoints(e)), []).append(e)

    paths: dict[int, str] = {}
    for e in pmap.edges:
        u, v = pmap.endpoints(e)
        bundle = bundles[frozenset((u, v))]
        offset = (bundle.index(e) - (len(bundle) - 1) / 2) * 18.0
        if u > v:
            u, v = v, u
        (x1, y1), (x2, y2) = xy(u), xy(v)
        if offset:
            dx, dy = x2 - x1, y2 - y1
            norm = math.hypot(dx, dy) or 1.0
            cx = (x1 + x2) / 2 - dy / norm * offset * 2
            cy = (y1 + y2) / 2 + dx / norm * offset * 2
            paths[e] = f"M {x1:.2f} {y1:.2f} Q {cx:.2f} {cy:.2f} {x2:.2f} {y2:.2f}"
        else:
            paths[e] = f"M {x1:.2f} {y1:.2f} L {x2:.2f} {y2:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<style>{_SVG_STYLE}</style>",
    ]
    for quad in (highlight or {}).get("diamonds", ()):
        a, b, c, d = quad
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(xy, (a, c, b, d)))
        out.append(f'<polygon class="diamond" points="{pts}"/>')
    for e in pmap.edges:
        if "H" in classes.get(e, []):
            out.append(f'<path class="hpath" d="{paths[e]}"/>')
    css = {"X": "x", "M": "m", "chords": "chord", "H": "h"}
    for e in pmap.edges:
        cls = " ".join(["edge"] + [css[c] for c in classes.get(e, [])])
        out.append(f'<path id="e{e}" class="{cls}" d="{paths[e]}"/>')
    for v in pmap.vertices:
        x, y = xy(v)
        out.append(f'<circle class="vertex" cx="{x:.2f}" cy="{y:.2f}" r="8"/>')
        out.append(f'<text x="{x:.2f}" y="{y:.2f}">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export_drawing(
    pmap: PlaneMultigraph,
    highlight: Mapping[str, Iterable] | None = None,
    format: str = "dot",
) -> str:
    """Render ``pmap`` as DOT or SVG text.

    ``highlight`` maps ``"X"``, ``"M"``, ``"chords"`` and ``"H"`` to edge ids
    and optionally ``"diamonds"`` to ``(a, b, c, d)`` vertex tuples.
    """
    if format == "dot":
        return _dot(pmap, highlight)
    if format == "svg":
        return _svg(pmap, highlight)
    raise ValueError(f"unsupported format {format!r}; use 'dot' or 'svg'")
