"""Built-in instance corpus with load-time property validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .errors import ValidationError
from .kempe import (
    MaximalPlanarGraph,
    build_generator_graph,
    derive_twin_bad_examples,
    is_impasse,
)
from .mapfile import (
    MapFile,
    load_path,
    mapfile_to_normal_map,
    mapfile_to_vertex_graph,
    parse_mapfile,
)
from .normal_map import NormalMap, euler_polygon_check

Instance = Union[NormalMap, Tuple[MaximalPlanarGraph, Dict[int, int]]]


@dataclass
class CorpusInstance:
    name: str
    kind: str  # "normal-map" | "vertex-graph"
    data: Instance
    expected: List[str] = field(default_factory=list)
    provenance: str = ""

    @property
    def map(self) -> NormalMap:
        if self.kind != "normal-map":
            raise ValidationError(f"{self.name} is not a map instance")
        return self.data  # type: ignore[return-value]

    @property
    def graph(self) -> MaximalPlanarGraph:
        if self.kind != "vertex-graph":
            raise ValidationError(f"{self.name} is not a graph instance")
        return self.data[0]  # type: ignore[index]

    @property
    def coloring(self) -> Dict[int, int]:
        return self.data[1]  # type: ignore[index]


_GRAPH_FILES = {
    "fritsch": ["impasse", "vertices:9"],
    "soifer": ["impasse", "vertices:9"],
    "errera": ["impasse", "vertices:17"],
    "poussin": ["impasse", "vertices:15"],
    "kittell": ["impasse", "vertices:23"],
    "heawood": ["impasse", "vertices:25"],
}
_MAP_FILES = {
    "tutte": ["non-hamiltonian", "faces:25"],
    "gardner": ["faces:110"],
    "appelhaken": ["faces:52"],
    "heawood3": ["3-colorable", "faces:17"],
    "referee": ["k4-forcing", "triangle-free"],
    "k4": ["faces:4"],
    "cube": ["faces:6"],
    "dodecahedron": ["faces:12"],
}


def _read_data(name: str) -> MapFile:
    text = (
        resources.files("fourcolor.data").joinpath(name).read_text()
    )
    return parse_mapfile(text)


def load_map(path: str | Path) -> Instance:
    """Load and validate an instance file (map/1 or graph/1)."""
    mf = load_path(path)
    if mf.kind == "map":
        m = mapfile_to_normal_map(mf)
        _, ok = euler_polygon_check(m)
        if not ok:
            raise ValidationError("polygon-count identity failed")
        return m
    return mapfile_to_vertex_graph(mf)


def _validate(inst: CorpusInstance) -> None:
    for prop in inst.expected:
        if prop.startswith("vertices:"):
            want = int(prop.split(":")[1])
            if inst.graph.n != want:
                raise ValidationError(
                    f"{inst.name}: expected {want} vertices, got {inst.graph.n}"
                )
        elif prop.startswith("faces:"):
            want = int(prop.split(":")[1])
            if inst.map.face_count != want:
                raise ValidationError(
                    f"{inst.name}: expected {want} regions, "
                    f"got {inst.map.face_count}"
                )
        elif prop == "impasse":
            ok, _ = is_impasse(inst.graph, inst.coloring)
            if not ok:
                raise ValidationError(f"{inst.name}: impasse check failed")
        elif prop == "3-colorable":
            if any(
                inst.map.face_size(f) % 2
                for f in range(inst.map.face_count)
            ):
                raise ValidationError(f"{inst.name}: has an odd region")
        elif prop == "triangle-free":
            if any(
                inst.map.face_size(f) <= 3
                for f in range(inst.map.face_count)
            ):
                raise ValidationError(f"{inst.name}: has a small region")
        elif prop == "k4-forcing":
            _validate_forcing(inst.map)
        elif prop == "non-hamiltonian":
            pass  # exact verdict is expensive; asserted by the test suite
        else:
            raise ValidationError(f"unknown expected property {prop!r}")


def _validate_forcing(m: NormalMap) -> None:
    """Some four mutually adjacent regions must exist."""
    n = m.face_count
    for a in range(n):
        for b in m.face_neighbors(a):
            if b < a:
                continue
            for c in m.face_neighbors(a):
                if c <= b or c not in m.face_neighbors(b):
                    continue
                for d in m.face_neighbors(a):
                    if (
                        d > c
                        and d in m.face_neighbors(b)
                        and d in m.face_neighbors(c)
                    ):
                        return
    raise ValidationError("no K4 of regions found")


def builtin_corpus(validate: bool = True) -> List[CorpusInstance]:
    """All shipped instances plus the generated twin bad examples."""
    out: List[CorpusInstance] = []
    for name, expected in _GRAPH_FILES.items():
        mf = _read_data(f"{name}.graph")
        g, coloring = mapfile_to_vertex_graph(mf)
        out.append(
            CorpusInstance(
                name=name,
                kind="vertex-graph",
                data=(g, coloring),
                expected=list(expected),
                provenance=" / ".join(mf.comments),
            )
        )
    for name, expected in _MAP_FILES.items():
        mf = _read_data(f"{name}.map")
        m = mapfile_to_normal_map(mf)
        out.append(
            CorpusInstance(
                name=name,
                kind="normal-map",
                data=m,
                expected=list(expected),
                provenance=" / ".join(mf.comments),
            )
        )
    for ring in (4, 6):
        gen = build_generator_graph(ring)
        g1, g2 = derive_twin_bad_examples(gen)
        size = g1.graph.n
        for label, bad in (("twin1", g1), ("twin2", g2)):
            out.append(
                CorpusInstance(
                    name=f"{label}-ring{ring}",
                    kind="vertex-graph",
                    data=(bad.graph, bad.coloring),
                    expected=["impasse", f"vertices:{size}"],
                    provenance=(
                        "generated handcuff twin (trouble in the "
                        f"{'inner' if label == 'twin1' else 'outer'} face)"
                    ),
                )
            )
    if validate:
        for inst in out:
            _validate(inst)
    return out


def corpus_instance(name: str, validate: bool = True) -> CorpusInstance:
    for inst in builtin_corpus(validate=False):
        if inst.name == name:
            if validate:
                _validate(inst)
            return inst
    raise ValidationError(f"no corpus instance named {name!r}")


def corpus_names() -> List[str]:
    return [inst.name for inst in builtin_corpus(validate=False)]


def resolve_instance(spec: str) -> Instance:
    """Resolve ``corpus:NAME`` or a filesystem path to a loaded instance."""
    if spec.startswith("corpus:"):
        return corpus_instance(spec.split(":", 1)[1]).data
    return load_map(spec)
