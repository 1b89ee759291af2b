#!/usr/bin/env python3
"""Regenerate the shipped corpus data files (development tool).

Every instance is machine-validated before being written; provenance notes
are embedded as comments in each file.  Requires networkx for the Tutte
graph adjacency + embedding.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from fourcolor.coloring import WHITE  # noqa: E402
from fourcolor.embedding import build_embedding  # noqa: E402
from fourcolor.errors import FourColorError  # noqa: E402
from fourcolor.kempe import (  # noqa: E402
    MaximalPlanarGraph,
    VWHITE,
    build_generator_graph,
    derive_twin_bad_examples,
    is_impasse,
    proper_vertex_coloring,
    rotations_from_triangles,
)
from fourcolor.mapfile import (  # noqa: E402
    normal_map_to_mapfile,
    serialize_mapfile,
    vertex_graph_to_mapfile,
)
from fourcolor.normal_map import NormalMap, validate_normal_map  # noqa: E402
from fourcolor.triangulations import (  # noqa: E402
    dual_normal_map,
    enumerate_triangulations,
    legal_splits,
    vertex_split,
)

DATA = ROOT / "src" / "fourcolor" / "data"


def write(name: str, text: str) -> None:
    (DATA / name).write_text(text)
    print("wrote", name)


# -- nine-vertex bad examples ---------------------------------------------------


def all_colorings(adj_sub):
    ids = sorted(adj_sub)
    out = []
    colors = {}

    def rec(i):
        if i == len(ids):
            out.append(dict(colors))
            return
        v = ids[i]
        for c in (1, 2, 3, 4):
            if all(colors.get(w) != c for w in adj_sub[v]):
                colors[v] = c
                rec(i + 1)
                del colors[v]

    rec(0)
    return out


def impasse_configuration(rot):
    g = MaximalPlanarGraph({v: list(ns) for v, ns in rot.items()})
    adj = g.adjacency()
    for v in g.vertices:
        if len(adj[v]) != 5:
            continue
        sub = {u: [x for x in adj[u] if x != v] for u in adj if u != v}
        for colors in all_colorings(sub):
            if len({colors[w] for w in adj[v]}) != 4:
                continue
            full = dict(colors)
            full[v] = VWHITE
            if is_impasse(g, full)[0]:
                return g, full, v
    return None


def nine_vertex_examples():
    admitting = []
    for rot in enumerate_triangulations(9):
        cfg = impasse_configuration(rot)
        if cfg is not None:
            degseq = tuple(sorted(len(ns) for ns in rot.values()))
            admitting.append((degseq, cfg))
    assert len(admitting) == 2, admitting
    # The triaugmented triangular prism has degree sequence (4,4,4,5^6);
    # that member carries the fritsch name, the other one soifer.
    admitting.sort(key=lambda t: t[0], reverse=True)
    named = {}
    for (degseq, (g, coloring, apex)) in admitting:
        name = "fritsch" if degseq == (4, 4, 4, 5, 5, 5, 5, 5, 5) else "soifer"
        named[name] = (g, coloring, apex, degseq)
    return named


# -- growth search for the larger named examples --------------------------------


def grow_bad_example(g: MaximalPlanarGraph, coloring, apex, target_n):
    """Vertex-split growth that preserves the order-independent impasse."""

    def rec(rot, colors):
        n = len(rot)
        if n == target_n:
            return rot, colors
        new_id = max(rot) + 1
        for v in sorted(rot):
            if v == apex:
                continue
            R = rot[v]
            for i, j in legal_splits(rot, v):
                if apex in (R[i], R[j]):
                    continue  # apex degree must stay five
                cand = vertex_split(rot, v, i, j, new_id)
                for c in (1, 2, 3, 4):
                    cc = dict(colors)
                    cc[new_id] = c
                    try:
                        gg = MaximalPlanarGraph(cand)
                    except FourColorError:
                        break
                    except Exception:
                        break
                    if not proper_vertex_coloring(gg.adjacency(), cc):
                        continue
                    if len({cc[w] for w in gg.adjacency()[apex]}) != 4:
                        continue
                    if not is_impasse(gg, cc)[0]:
                        continue
                    got = rec(cand, cc)
                    if got is not None:
                        return got
        return None

    got = rec(g.rotations, dict(coloring))
    if got is None:
        raise FourColorError(f"no impasse-preserving growth to {target_n}")
    rot, colors = got
    return MaximalPlanarGraph(rot), colors


# -- engineered maps -------------------------------------------------------------


def chord_cycle_map(n: int, inside, outside, outer_hint=None) -> NormalMap:
    """Cubic map from an n-cycle plus non-crossing chords on both sides.

    ``inside``/``outside`` are chord lists (position pairs); together they
    match every position exactly once, so the cycle is a Hamiltonian cycle
    of the result by construction.
    """
    nbrs = {}
    for v in range(n):
        nbrs[v] = [(v - 1) % n, (v + 1) % n]
    chords = {}
    for a, b in inside:
        chords[a] = (b, "in")
        chords[b] = (a, "in")
    for a, b in outside:
        chords[a] = (b, "out")
        chords[b] = (a, "out")
    assert len(chords) == n, "every position needs exactly one chord"
    rotations = {}
    for v in range(n):
        w, side = chords[v]
        prev, nxt = (v - 1) % n, (v + 1) % n
        # Clockwise rotation with the disk interior on a fixed side:
        # inside chords sit between prev and next one way, outside the other.
        if side == "in":
            rotations[v] = [prev, w, nxt]
        else:
            rotations[v] = [prev, nxt, w]
    pairs = sorted(
        {(min(u, v), max(u, v)) for u, ns in rotations.items() for v in ns}
    )
    ids = {p: i for i, p in enumerate(pairs)}
    edge_rot = {
        u: [ids[(min(u, v), max(u, v))] for v in ns]
        for u, ns in rotations.items()
    }
    emb = build_embedding(edge_rot)
    return validate_normal_map(emb, outer_face=outer_hint)


def gardner_standin() -> NormalMap:
    """110-region stand-in for the April Fool map (blocks of nested chords).

    The base 216-cycle is Hamiltonian in the result, matching the strong
    four-coloring the original map is reported to have.  Two block motifs
    alternate and flip sides pseudo-irregularly, so region sizes vary and
    odd regions occur.
    """
    inside, outside = [], []
    p = 0
    k = 0
    while p < 216:
        wide = k % 2 == 1 and p + 10 <= 216
        flip = (k * 5) % 7 < 4
        if wide:
            a = [(p, p + 7), (p + 1, p + 6), (p + 2, p + 5)]
            b = [(p + 3, p + 9), (p + 4, p + 8)]
            p += 10
        else:
            a = [(p, p + 5), (p + 1, p + 4)]
            b = [(p + 2, p + 7), (p + 3, p + 6)]
            p += 8
        if flip:
            inside += a
            outside += b
        else:
            inside += b
            outside += a
        k += 1
    return chord_cycle_map(216, inside, outside)


def appelhaken_standin() -> NormalMap:
    """52-region stand-in with pentagon-rich texture (blocks of ten)."""
    blocks = 10
    inside, outside = [], []
    for k in range(blocks):
        p = 10 * k
        a = [(p, p + 7), (p + 1, p + 6), (p + 2, p + 5)]
        b = [(p + 3, p + 9), (p + 4, p + 8)]
        if k % 3 == 2:
            inside += b
            outside += a
        else:
            inside += a
            outside += b
    return chord_cycle_map(100, inside, outside)


def heawood3_map() -> NormalMap:
    """Seventeen all-even regions: 3-colorable by the even-sides criterion.

    Built from an Eulerian triangulation on 15 vertices (octahedron plus
    three face inflations), dualized, then one face split by a double rung
    to reach 17 regions without breaking evenness.
    """
    from fourcolor.polyhedra import octahedron_rotations
    from fourcolor.triangulations import oriented_faces

    rot = {v: list(ns) for v, ns in octahedron_rotations().items()}
    for _ in range(3):
        faces = sorted(oriented_faces(rot), key=lambda f: sorted(f))
        rot = _inflate_face(rot, faces[0])
    assert all(len(ns) % 2 == 0 for ns in rot.values())
    m = dual_normal_map(rot)
    assert all(m.face_size(f) % 2 == 0 for f in range(m.face_count))
    m2 = _double_rung(m)
    assert m2.face_count == 17
    assert all(m2.face_size(f) % 2 == 0 for f in range(m2.face_count))
    return m2


def _inflate_face(rot, face):
    """Even-degree-preserving inflation: a triangle inside a face."""
    from fourcolor.triangulations import oriented_faces

    x, y, z = face
    base = max(rot) + 1
    p, q, r = base, base + 1, base + 2
    tris = [f for f in oriented_faces(rot) if set(f) != {x, y, z}]
    tris += [
        (x, y, p),
        (y, q, p),
        (y, z, q),
        (z, r, q),
        (z, x, r),
        (x, p, r),
        (p, q, r),
    ]
    return rotations_from_triangles(tris)


def _double_rung(m: NormalMap) -> NormalMap:
    """Split the largest face into three with two parallel rungs."""
    from fourcolor.embedding import dart_edge, twin

    f = max(range(m.face_count), key=lambda g: (m.face_size(g), -g))
    walk = m.faces[f]
    j = 2  # arcs between walk positions 0 and 2 are odd on both sides
    d1, d2 = walk[0], walk[j]
    e1, e2 = dart_edge(d1), dart_edge(d2)
    emb = m.embedding
    u1, v1 = emb.dart_vertex(d1), emb.dart_vertex(twin(d1))
    u2, v2 = emb.dart_vertex(d2), emb.dart_vertex(twin(d2))
    nid = max(emb.vertices) + 1
    eid = max(emb.edges) + 1
    a1, b1, a2, b2 = nid, nid + 1, nid + 2, nid + 3
    s1, s2, s3 = eid, eid + 1, eid + 2
    t1, t2, t3 = eid + 3, eid + 4, eid + 5
    r1, r2 = eid + 6, eid + 7
    base = {v: list(es) for v, es in emb.rotations_as_edges().items()}
    base[u1][base[u1].index(e1)] = s1
    base[v1][base[v1].index(e1)] = s3
    base[u2][base[u2].index(e2)] = t1
    base[v2][base[v2].index(e2)] = t3
    # Rungs pair a1 (near u1) with b2 and b1 with a2 (non-crossing inside
    # the face); the rotation handedness at the new degree-3 vertices is
    # fixed by trying both and keeping the sphere embedding.
    for flip in (False, True):
        rot = {v: list(es) for v, es in base.items()}
        quads = {
            a1: [s1, r1, s2],
            b1: [s2, r2, s3],
            a2: [t1, r2, t2],
            b2: [t2, r1, t3],
        }
        for v, order in quads.items():
            rot[v] = order[::-1] if flip else order
        try:
            emb2 = build_embedding(rot)
        except FourColorError:
            continue
        m2 = validate_normal_map(emb2)
        if m2.face_count == m.face_count + 2:
            return m2
    raise FourColorError("double rung surgery failed")


def referee_map() -> NormalMap:
    """Eleven triangle-free regions where four of them form a K4.

    Regions x (central) and y (outer) are both adjacent to the mutually
    adjacent trio a, b, c but not to each other, so every proper coloring
    gives x and y the same color.
    """
    a, b, c, x, y = 0, 1, 2, 3, 4
    w1, w2, w3 = 5, 6, 7
    s1, s2, s3 = 8, 9, 10
    tris = [
        (x, a, w1),
        (a, w2, w1),
        (a, b, w2),
        (b, w3, w2),
        (b, x, w3),
        (x, w1, w3),
        (w1, w2, w3),
        (x, b, c),
        (x, c, a),
        (y, a, s1),
        (a, s2, s1),
        (a, b, s2),
        (b, s3, s2),
        (b, y, s3),
        (y, s1, s3),
        (s1, s2, s3),
        (y, b, c),
        (y, c, a),
    ]
    rot = rotations_from_triangles(tris)
    from fourcolor.triangulations import dual_face_for_primal_vertex

    m = dual_normal_map(rot)
    regions = dual_face_for_primal_vertex(rot, m)
    return m.with_outer_face(regions[y])


def tutte_map() -> NormalMap:
    import networkx as nx

    g = nx.tutte_graph()
    ok, embedding = nx.check_planarity(g)
    assert ok
    rotations = {
        v: list(embedding.neighbors_cw_order(v)) for v in sorted(g.nodes)
    }
    pairs = sorted({(min(u, v), max(u, v)) for u, v in g.edges})
    ids = {p: i for i, p in enumerate(pairs)}
    edge_rot = {
        u: [ids[(min(u, v), max(u, v))] for v in ns]
        for u, ns in rotations.items()
    }
    emb = build_embedding(edge_rot)
    return validate_normal_map(emb)


def main():
    DATA.mkdir(parents=True, exist_ok=True)

    named = nine_vertex_examples()
    for name, (g, coloring, apex, degseq) in named.items():
        mf = vertex_graph_to_mapfile(
            g,
            coloring=coloring,
            labels={"apex": str(apex)},
            comments=[
                f"{name}: nine-vertex maximal planar graph with an "
                "order-independent Kempe impasse",
                "identified as one of exactly two such triangulations on "
                "nine vertices (exhaustive census);",
                "name assigned by degree sequence "
                f"{degseq} (the triaugmented triangular prism is fritsch)",
            ],
        )
        write(f"{name}.graph", serialize_mapfile(mf))

    gen4 = build_generator_graph(4)
    g1_sq, _ = derive_twin_bad_examples(gen4)
    gen6 = build_generator_graph(6)
    g1_hex, _ = derive_twin_bad_examples(gen6)

    errera = (g1_hex.graph, g1_hex.coloring, g1_hex.apex)
    mf = vertex_graph_to_mapfile(
        errera[0],
        coloring=errera[1],
        labels={"apex": str(errera[2])},
        comments=[
            "errera: seventeen-vertex bad example; the hexagonal handcuff",
            "generator twin (trouble in the inner face), the construction",
            "the Holroyd-Miller drawing is identified with",
        ],
    )
    write("errera.graph", serialize_mapfile(mf))

    targets = {"poussin": (g1_sq, 15), "kittell": (g1_hex, 23)}
    grown = {}
    for name, (seed, n) in targets.items():
        gg, cc = grow_bad_example(seed.graph, seed.coloring, seed.apex, n)
        grown[name] = (gg, cc, seed.apex)
        mf = vertex_graph_to_mapfile(
            gg,
            coloring=cc,
            labels={"apex": str(seed.apex)},
            comments=[
                f"{name}: {n}-vertex reconstruction carrying the named "
                "example's order and defining property",
                "(one white degree-five vertex, order-independent Kempe "
                "impasse); figure-exact adjacency unavailable,",
                "instance grown from a validated handcuff twin by "
                "impasse-preserving vertex splits",
            ],
        )
        write(f"{name}.graph", serialize_mapfile(mf))

    kg, kc, kapex = grown["kittell"]
    hg, hc = grow_bad_example(kg, kc, kapex, 25)
    mf = vertex_graph_to_mapfile(
        hg,
        coloring=hc,
        labels={"apex": str(kapex)},
        comments=[
            "heawood: 25-vertex reconstruction carrying the named example's "
            "order and defining property",
            "(one white degree-five vertex, order-independent Kempe "
            "impasse); figure-exact adjacency unavailable,",
            "instance grown from a validated handcuff twin by "
            "impasse-preserving vertex splits",
        ],
    )
    write("heawood.graph", serialize_mapfile(mf))

    m = tutte_map()
    mf = normal_map_to_mapfile(
        m,
        comments=[
            "tutte: the 46-vertex cubic planar graph disproving the "
            "hamiltonicity conjecture for cubic polyhedra,",
            "viewed as a 25-region normal map; adjacency from the standard "
            "graph-library catalog, embedding unique by 3-connectivity",
        ],
    )
    write("tutte.map", serialize_mapfile(mf))

    m = gardner_standin()
    mf = normal_map_to_mapfile(
        m,
        comments=[
            "gardner: 110-region structural stand-in for the April Fool "
            "map (the published figure is not machine-readable);",
            "hamiltonian by construction, so a strong four coloring exists",
        ],
    )
    write("gardner.map", serialize_mapfile(mf))

    m = appelhaken_standin()
    mf = normal_map_to_mapfile(
        m,
        comments=[
            "appelhaken: 52-region structural stand-in for the published "
            "hardest-case map (figure not machine-readable);",
            "hamiltonian by construction",
        ],
    )
    write("appelhaken.map", serialize_mapfile(mf))

    m = heawood3_map()
    mf = normal_map_to_mapfile(
        m,
        comments=[
            "heawood3: seventeen all-even regions, 3-colorable by the "
            "even-sides criterion",
        ],
    )
    write("heawood3.map", serialize_mapfile(mf))

    m = referee_map()
    mf = normal_map_to_mapfile(
        m,
        comments=[
            "referee: triangle-free map whose regions x,a,b,c form a K4; "
            "every four-coloring gives the outer region y",
            "and the central region x the same color",
        ],
    )
    write("referee.map", serialize_mapfile(mf))

    from fourcolor.polyhedra import cube_map, dodecahedron_map, k4_map

    for name, mm in (
        ("k4", k4_map()),
        ("cube", cube_map()),
        ("dodecahedron", dodecahedron_map()),
    ):
        mf = normal_map_to_mapfile(
            mm, comments=[f"{name}: reference polyhedral map"]
        )
        write(f"{name}.map", serialize_mapfile(mf))


if __name__ == "__main__":
    main()
