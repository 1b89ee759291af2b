"""Plain-text instance format for normal maps and vertex graphs.

Grammar (one directive per line, ``#`` starts a comment):

    format map/1 | graph/1
    vertices N
    outer F                 (maps only, optional)
    V: e_a e_b e_c ...      (rotation line: edge ids clockwise at vertex V)
    labels                  (optional section)
    NAME: free text
    coloring                (optional section)
    ID: colorname           (face color for maps, vertex color for graphs)

Canonical files serialize back byte-identically: directives in the order
above, rotation lines sorted by vertex id, single spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .coloring import COLOR_IDS, COLOR_NAMES
from .embedding import build_embedding
from .errors import ParseError, ValidationError
from .kempe import VCOLOR_IDS, VCOLOR_NAMES, MaximalPlanarGraph
from .normal_map import NormalMap, validate_normal_map


@dataclass
class MapFile:
    kind: str  # "map" | "graph"
    rotations: Dict[int, List[int]]  # vertex -> edge ids
    outer: Optional[int] = None
    labels: Dict[str, str] = field(default_factory=dict)
    coloring: Dict[int, int] = field(default_factory=dict)
    comments: List[str] = field(default_factory=list)


def parse_mapfile(text: str) -> MapFile:
    kind = None
    rotations: Dict[int, List[int]] = {}
    outer = None
    labels: Dict[str, str] = {}
    coloring: Dict[int, int] = {}
    comments: List[str] = []
    vertices_declared = None
    section = "head"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        if line.startswith("format "):
            spec = line.split(None, 1)[1]
            if spec not in ("map/1", "graph/1"):
                raise ParseError(f"unknown format {spec!r}", lineno)
            kind = spec.split("/")[0]
            continue
        if line.startswith("vertices "):
            try:
                vertices_declared = int(line.split()[1])
            except (IndexError, ValueError):
                raise ParseError("bad vertices directive", lineno)
            continue
        if line.startswith("outer "):
            try:
                outer = int(line.split()[1])
            except (IndexError, ValueError):
                raise ParseError("bad outer directive", lineno)
            continue
        if line == "labels":
            section = "labels"
            continue
        if line == "coloring":
            section = "coloring"
            continue
        if ":" not in line:
            raise ParseError(f"unparseable line {raw!r}", lineno)
        head, _, tail = line.partition(":")
        head = head.strip()
        tail = tail.strip()
        if section == "labels":
            labels[head] = tail
            continue
        if section == "coloring":
            try:
                ident = int(head)
            except ValueError:
                raise ParseError(f"bad id {head!r}", lineno)
            names = COLOR_IDS if kind == "map" else VCOLOR_IDS
            if tail not in names:
                raise ParseError(f"unknown color {tail!r}", lineno)
            coloring[ident] = names[tail]
            continue
        try:
            v = int(head)
            edges = [int(tok) for tok in tail.split()]
        except ValueError:
            raise ParseError(f"bad rotation line {raw!r}", lineno)
        if v in rotations:
            raise ParseError(f"duplicate rotation for vertex {v}", lineno)
        rotations[v] = edges
    if kind is None:
        raise ParseError("missing format directive")
    if not rotations:
        raise ParseError("no rotation lines")
    if vertices_declared is not None and vertices_declared != len(rotations):
        raise ParseError(
            f"vertices directive says {vertices_declared}, "
            f"got {len(rotations)} rotation lines"
        )
    return MapFile(
        kind=kind,
        rotations=rotations,
        outer=outer,
        labels=labels,
        coloring=coloring,
        comments=comments,
    )


def serialize_mapfile(mf: MapFile) -> str:
    out: List[str] = []
    for c in mf.comments:
        out.append(f"# {c}")
    out.append(f"format {mf.kind}/1")
    out.append(f"vertices {len(mf.rotations)}")
    if mf.outer is not None:
        out.append(f"outer {mf.outer}")
    for v in sorted(mf.rotations):
        out.append(f"{v}: " + " ".join(str(e) for e in mf.rotations[v]))
    if mf.labels:
        out.append("labels")
        for k in sorted(mf.labels):
            out.append(f"{k}: {mf.labels[k]}")
    if mf.coloring:
        out.append("coloring")
        names = COLOR_NAMES if mf.kind == "map" else VCOLOR_NAMES
        for ident in sorted(mf.coloring):
            out.append(f"{ident}: {names[mf.coloring[ident]]}")
    return "\n".join(out) + "\n"


def mapfile_to_normal_map(mf: MapFile) -> NormalMap:
    if mf.kind != "map":
        raise ValidationError("expected a map/1 file")
    emb = build_embedding(mf.rotations)
    return validate_normal_map(emb, outer_face=mf.outer)


def mapfile_to_vertex_graph(
    mf: MapFile,
) -> Tuple[MaximalPlanarGraph, Dict[int, int]]:
    if mf.kind != "graph":
        raise ValidationError("expected a graph/1 file")
    emb = build_embedding(mf.rotations)
    # Rebuild neighbor rotations from the edge rotations.
    from .embedding import twin

    neighbors = {
        v: [emb.dart_vertex(twin(d)) for d in emb.rot[v]] for v in emb.vertices
    }
    g = MaximalPlanarGraph(neighbors)
    return g, dict(mf.coloring)


def normal_map_to_mapfile(
    m: NormalMap,
    coloring: Optional[Dict[int, int]] = None,
    labels: Optional[Dict[str, str]] = None,
    comments: Optional[List[str]] = None,
) -> MapFile:
    return MapFile(
        kind="map",
        rotations=m.embedding.rotations_as_edges(),
        outer=m.outer_face,
        labels=dict(labels or {}),
        coloring=dict(coloring or {}),
        comments=list(comments or []),
    )


def vertex_graph_to_mapfile(
    g: MaximalPlanarGraph,
    coloring: Optional[Dict[int, int]] = None,
    labels: Optional[Dict[str, str]] = None,
    comments: Optional[List[str]] = None,
) -> MapFile:
    from .triangulations import as_edge_rotations

    return MapFile(
        kind="graph",
        rotations=as_edge_rotations(g.rotations),
        outer=None,
        labels=dict(labels or {}),
        coloring=dict(coloring or {}),
        comments=list(comments or []),
    )


def load_path(path: str | Path) -> MapFile:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc}")
    return parse_mapfile(text)
