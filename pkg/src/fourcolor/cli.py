"""Command-line driver.

Exit codes: 0 success, 1 verification failure or strict-mode impasse,
2 input error, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coloring import COLOR_IDS, COLOR_NAMES, colors_used
from .corpus import builtin_corpus, corpus_instance, resolve_instance
from .errors import FourColorError, HeuristicFailed, ParseError, ValidationError
from .kempe import (
    VCOLOR_NAMES,
    build_generator_graph,
    derive_twin_bad_examples,
    is_impasse,
    kempe_four_color,
    ImpasseTrace,
)
from .mapfile import (
    normal_map_to_mapfile,
    serialize_mapfile,
    vertex_graph_to_mapfile,
)
from .normal_map import NormalMap, euler_polygon_check
from .oracle import (
    backtrack_four_color,
    is_hamiltonian,
    strong_coloring_search,
    three_colorable_by_heawood,
    verify_proper,
)
from .render import render_svg
from .spiral import spiral_order
from .steps import four_color

USAGE_ERROR = 64


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load_map(spec: str) -> NormalMap:
    inst = resolve_instance(spec)
    if not isinstance(inst, NormalMap):
        raise ValidationError(f"{spec} is a vertex graph, expected a map")
    return inst


def cmd_color(args) -> int:
    m = _load_map(args.map)
    try:
        colors, report = four_color(m, strict=args.strict, direction=args.direction)
    except HeuristicFailed as exc:
        _emit(args, {"status": "impasse", "reason": str(exc)}, f"impasse: {exc}")
        return 1
    ok = verify_proper(m.dual_adjacency(), colors)
    if args.report:
        Path(args.report).write_text(report.to_json())
    if args.svg:
        render_svg(m, colors, args.svg)
    payload = {
        "status": "ok" if ok else "improper",
        "colors": {str(f): COLOR_NAMES[c] for f, c in enumerate(colors)},
        "colors_used": colors_used(colors),
        "fallback": report.fallback,
    }
    text = (
        f"{'proper' if ok else 'IMPROPER'} coloring of {m.face_count} regions "
        f"with {colors_used(colors)} colors"
        + (f" (fallback: {report.fallback_reason})" if report.fallback else "")
    )
    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    m = _load_map(args.map)
    colors = [0] * m.face_count
    for line in Path(args.coloring).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line == "coloring":
            continue
        head, _, tail = line.partition(":")
        colors[int(head.strip())] = COLOR_IDS[tail.strip()]
    ok = verify_proper(m.dual_adjacency(), colors)
    _emit(args, {"proper": ok}, "proper" if ok else "improper")
    return 0 if ok else 1


def cmd_spiral(args) -> int:
    m = _load_map(args.map)
    sp = spiral_order(m, args.direction)
    payload = {"order": sp.order, "chains": sp.chains}
    text = "\n".join(
        f"chain {i + 1}: " + " ".join(str(f) for f in chain)
        for i, chain in enumerate(sp.chains)
    )
    _emit(args, payload, text)
    return 0


def cmd_kempe(args) -> int:
    inst = resolve_instance(args.graph)
    if isinstance(inst, NormalMap):
        raise ValidationError(f"{args.graph} is a map, expected a vertex graph")
    g, coloring = inst
    partial = coloring if coloring else None
    result = kempe_four_color(g, partial=partial)
    if isinstance(result, ImpasseTrace):
        payload = {
            "status": "impasse",
            "vertex": result.vertex,
            "neighbor_colors": [
                VCOLOR_NAMES[c] for c in result.neighbor_colors
            ],
            "note": result.note,
        }
        if args.trace:
            payload["attempts"] = result.attempts
        _emit(
            args,
            payload,
            f"impasse at vertex {result.vertex}: {result.note}",
        )
        return 1
    payload = {
        "status": "ok",
        "colors": {str(v): VCOLOR_NAMES[c] for v, c in sorted(result.items())},
    }
    _emit(args, payload, f"proper 4-coloring of {g.n} vertices")
    return 0


def cmd_generate_bad(args) -> int:
    gen = build_generator_graph(args.ring)
    g1, g2 = derive_twin_bad_examples(gen)
    outdir = Path(args.out) if args.out else None
    summary = {}
    for label, bad in (("g1", g1), ("g2", g2)):
        imp, _ = is_impasse(bad.graph, bad.coloring)
        summary[label] = {"vertices": bad.graph.n, "impasse": imp}
        if outdir:
            outdir.mkdir(parents=True, exist_ok=True)
            mf = vertex_graph_to_mapfile(
                bad.graph,
                coloring=bad.coloring,
                labels={"apex": str(bad.apex)},
                comments=[f"generated twin {label} (ring size {args.ring})"],
            )
            (outdir / f"twin-{label}-ring{args.ring}.graph").write_text(
                serialize_mapfile(mf)
            )
    text = " ".join(
        f"{k}: n={v['vertices']} impasse={v['impasse']}" for k, v in summary.items()
    )
    _emit(args, summary, text)
    return 0


def cmd_oracle(args) -> int:
    inst = resolve_instance(args.instance)
    if isinstance(inst, NormalMap):
        adj = inst.dual_adjacency()
    else:
        adj = inst[0].adjacency()
    found = backtrack_four_color(adj)
    payload = {"four_colorable": found is not None}
    if found is not None and isinstance(inst, NormalMap):
        payload["colors"] = {str(f): COLOR_NAMES[c] for f, c in enumerate(found)}
    _emit(
        args,
        payload,
        "4-colorable" if found is not None else "not 4-colorable",
    )
    return 0


def cmd_analyze(args) -> int:
    m = _load_map(args.map)
    payload: dict = {
        "faces": m.face_count,
        "vertices": m.vertex_count,
        "edges": m.edge_count,
    }
    lines = [
        f"regions={m.face_count} corners={m.vertex_count} borders={m.edge_count}"
    ]
    if args.euler:
        stats, ok = euler_polygon_check(m)
        payload["euler_identity"] = ok
        payload["face_sizes"] = {str(k): v for k, v in sorted(stats.p.items())}
        lines.append(f"polygon identity: {'holds' if ok else 'FAILS'}")
    if args.hamiltonian:
        ham = is_hamiltonian(m.embedding.adjacency(), bound=args.bound)
        payload["hamiltonian"] = ham
        lines.append(f"hamiltonian: {ham}")
    if args.heawood3:
        three = three_colorable_by_heawood(m)
        payload["three_colorable"] = three
        lines.append(f"3-colorable (even-sides criterion): {three}")
    if args.strong:
        witness = strong_coloring_search(m)
        payload["strong_coloring"] = witness is not None
        lines.append(f"strong four coloring: {witness is not None}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_corpus(args) -> int:
    if args.action == "list":
        names = [i.name for i in builtin_corpus(validate=False)]
        _emit(args, {"instances": names}, "\n".join(names))
        return 0
    if args.action == "check":
        results = {}
        for inst in builtin_corpus(validate=True):
            results[inst.name] = "ok"
        _emit(
            args,
            results,
            "\n".join(f"{k}: ok" for k in results),
        )
        return 0
    if args.action == "export":
        if not args.name:
            print("corpus export needs a name", file=sys.stderr)
            return USAGE_ERROR
        inst = corpus_instance(args.name)
        if inst.kind == "normal-map":
            mf = normal_map_to_mapfile(
                inst.map, comments=[inst.provenance] if inst.provenance else []
            )
        else:
            mf = vertex_graph_to_mapfile(
                inst.graph,
                coloring=inst.coloring,
                comments=[inst.provenance] if inst.provenance else [],
            )
        sys.stdout.write(serialize_mapfile(mf))
        return 0
    return USAGE_ERROR


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fourcolor",
        description="Planar map four-coloring engine (spiral-chain pipeline, "
        "Kempe machinery, exact oracles)",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command")

    c = sub.add_parser("color", help="run the coloring pipeline")
    c.add_argument("map", help="path or corpus:NAME")
    c.add_argument("--strict", action="store_true", help="no oracle fallback")
    c.add_argument("--report", help="write the run report (json) here")
    c.add_argument("--svg", help="write a colored drawing here")
    c.add_argument(
        "--ccw", dest="direction", action="store_const", const="ccw",
        default="cw", help="counter-clockwise spiral",
    )
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring file against a map")
    v.add_argument("map")
    v.add_argument("coloring", help="file of 'region: colorname' lines")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("spiral", help="print the spiral chains")
    s.add_argument("map")
    s.add_argument(
        "--ccw", dest="direction", action="store_const", const="ccw",
        default="cw",
    )
    s.set_defaults(func=cmd_spiral)

    k = sub.add_parser("kempe", help="run Kempe's algorithm on a vertex graph")
    k.add_argument("graph")
    k.add_argument("--trace", action="store_true", help="include attempts")
    k.set_defaults(func=cmd_kempe)

    g = sub.add_parser("generate-bad", help="generate twin bad examples")
    g.add_argument("--ring", type=int, choices=(4, 6), required=True)
    g.add_argument("--out", help="directory for instance files")
    g.set_defaults(func=cmd_generate_bad)

    o = sub.add_parser("oracle", help="exact backtracking 4-coloring")
    o.add_argument("instance")
    o.set_defaults(func=cmd_oracle)

    a = sub.add_parser("analyze", help="structural analyses")
    a.add_argument("map")
    a.add_argument("--euler", action="store_true")
    a.add_argument("--strong", action="store_true")
    a.add_argument("--hamiltonian", action="store_true")
    a.add_argument("--heawood3", action="store_true")
    a.add_argument("--bound", type=int, default=60)
    a.set_defaults(func=cmd_analyze)

    co = sub.add_parser("corpus", help="corpus operations")
    co.add_argument("action", choices=("list", "check", "export"))
    co.add_argument("name", nargs="?")
    co.set_defaults(func=cmd_corpus)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    if not getattr(args, "func", None):
        parser.print_help()
        return USAGE_ERROR
    try:
        return args.func(args)
    except (ParseError, ValidationError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except FourColorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
