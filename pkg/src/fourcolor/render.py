"""SVG rendering of colored maps and DOT export of duals."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np

from .coloring import WHITE
from .errors import LayoutFailure
from .normal_map import NormalMap

FILLS = {
    0: "#ffffff",  # white
    1: "#8b5a2b",  # brown
    2: "#2e8b57",  # green
    3: "#87cefa",  # light blue
    4: "#1e3a8a",  # dark blue
}


def tutte_layout(m: NormalMap) -> Dict[int, tuple]:
    """Barycentric layout with the outer region's boundary pinned.

    Every non-pinned vertex is placed at the average of its neighbors,
    which gives a planar straight-line drawing for 3-connected maps.
    """
    emb = m.embedding
    verts = emb.vertices
    index = {v: i for i, v in enumerate(verts)}
    outer_walk = [emb.dart_vertex(d) for d in m.faces[m.outer_face]]
    pinned: Dict[int, tuple] = {}
    k = len(outer_walk)
    for i, v in enumerate(outer_walk):
        ang = 2 * math.pi * i / k
        pinned[v] = (math.cos(ang), math.sin(ang))
    if len(pinned) < 3:
        raise LayoutFailure("outer boundary has fewer than three corners")
    n = len(verts)
    a = np.zeros((n, n))
    bx = np.zeros(n)
    by = np.zeros(n)
    for v in verts:
        i = index[v]
        if v in pinned:
            a[i, i] = 1.0
            bx[i], by[i] = pinned[v]
            continue
        nbrs = emb.neighbors(v)
        a[i, i] = len(nbrs)
        for w in nbrs:
            a[i, index[w]] -= 1.0
    try:
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
    except np.linalg.LinAlgError as exc:
        raise LayoutFailure(str(exc))
    pos = {v: (float(xs[index[v]]), float(ys[index[v]])) for v in verts}
    return pos


def _fallback_layout(m: NormalMap) -> Dict[int, tuple]:
    """Concentric BFS layout for maps that defeat the barycentric solve."""
    emb = m.embedding
    verts = emb.vertices
    root = verts[0]
    layer = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in emb.neighbors(u):
            if w not in layer:
                layer[w] = layer[u] + 1
                order.append(w)
    by_layer: Dict[int, List[int]] = {}
    for v, l in layer.items():
        by_layer.setdefault(l, []).append(v)
    pos = {}
    for l, members in by_layer.items():
        r = 0.2 + l * 0.8 / (max(by_layer) + 1)
        for j, v in enumerate(sorted(members)):
            ang = 2 * math.pi * j / len(members) + 0.1 * l
            pos[v] = (r * math.cos(ang), r * math.sin(ang))
    return pos


def render_svg(
    m: NormalMap,
    coloring: Optional[Sequence[int]] = None,
    path: Optional[str | Path] = None,
    size: int = 640,
) -> str:
    """Deterministic SVG with one filled polygon per bounded region.

    The outer region's color fills the background.  Returns the SVG text
    and writes it to ``path`` when given.
    """
    colors = list(coloring) if coloring is not None else [WHITE] * m.face_count
    try:
        pos = tutte_layout(m)
        degenerate = _layout_degenerate(m, pos)
    except LayoutFailure:
        degenerate = True
    if degenerate:
        pos = _fallback_layout(m)
    pad = 0.08
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    lo = min(min(xs), min(ys)) - pad
    hi = max(max(xs), max(ys)) + pad
    scale = size / (hi - lo)

    def pt(v):
        x, y = pos[v]
        return ((x - lo) * scale, (y - lo) * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" '
        f'fill="{FILLS[colors[m.outer_face]]}"/>',
    ]
    emb = m.embedding
    for f in range(m.face_count):
        if f == m.outer_face:
            continue
        walk = [emb.dart_vertex(d) for d in m.faces[f]]
        points = " ".join("%.3f,%.3f" % pt(v) for v in walk)
        lines.append(
            f'<polygon points="{points}" fill="{FILLS[colors[f]]}" '
            'stroke="#222222" stroke-width="1.5"/>'
        )
    lines.append("</svg>")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _layout_degenerate(m: NormalMap, pos: Dict[int, tuple]) -> bool:
    seen = set()
    for v, (x, y) in pos.items():
        key = (round(x, 9), round(y, 9))
        if key in seen:
            return True
        seen.add(key)
    return False


def dual_dot(m: NormalMap, coloring: Optional[Sequence[int]] = None) -> str:
    """Graphviz text of the simple dual, for debugging."""
    out = ["graph dual {"]
    for f in range(m.face_count):
        attrs = [f'label="r{f} ({m.face_size(f)})"']
        if coloring is not None:
            attrs.append(f'fillcolor="{FILLS[coloring[f]]}"')
            attrs.append('style="filled"')
        out.append(f"  f{f} [{', '.join(attrs)}];")
    for f in range(m.face_count):
        for g in m.face_neighbors(f):
            if g > f:
                out.append(f"  f{f} -- f{g};")
    out.append("}")
    return "\n".join(out) + "\n"
