"""The three-step map coloring algorithm and its odd-ring blocking loop.

Step 1 greedily builds a maximal brown (highland) set along the spiral,
always preferring the largest-sided eligible region in the second
neighborhood of the last brown region.  Step 2 adds green the same way,
prioritizing regions carrying the most spot vertices, preferring even
sizes, and refusing assignments whose merged colored sub-map would acquire
odd size-parity (the label guard for odd surrounding rings).  Any odd white
cycle that survives is attacked by Kempe-style recoloring of a ring region;
step 3 then 2-colors the white forest with the two blues.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .coloring import (
    BROWN,
    COLOR_NAMES,
    DARK_BLUE,
    GREEN,
    LIGHT_BLUE,
    WHITE,
    blank_coloring,
    compute_spots,
    colors_used,
    detect_islands,
    is_proper,
    spot_count_on_face,
)
from .contraction import contract_small_faces, expand_small_faces
from .errors import (
    BlockingFailed,
    HeuristicFailed,
    ImproperInput,
    NotBipartite,
    Stuck,
)
from .normal_map import NormalMap
from .rings import (
    colored_submaps,
    odd_white_cycle,
    white_components,
    white_subgraph,
)
from .spiral import SpiralOrder, spiral_order


@dataclass
class RunReport:
    """Structured trace of one pipeline run; one line per decision."""

    lines: List[str] = field(default_factory=list)
    spiral_chains: List[int] = field(default_factory=list)
    brown: List[int] = field(default_factory=list)
    green: List[int] = field(default_factory=list)
    rings_found: int = 0
    rings_blocked: int = 0
    degenerate: bool = False
    fallback: bool = False
    fallback_reason: str = ""
    colors_used: int = 0
    verified: bool = False

    def log(self, text: str) -> None:
        self.lines.append(text)

    def to_text(self) -> str:
        return "\n".join(self.lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "spiral_chains": self.spiral_chains,
                "brown": self.brown,
                "green": self.green,
                "rings_found": self.rings_found,
                "rings_blocked": self.rings_blocked,
                "degenerate": self.degenerate,
                "fallback": self.fallback,
                "fallback_reason": self.fallback_reason,
                "colors_used": self.colors_used,
                "verified": self.verified,
                "decisions": self.lines,
            },
            indent=2,
        )


def _second_neighborhood(m: NormalMap, f: int) -> Set[int]:
    first = set(m.face_neighbors(f))
    second: Set[int] = set()
    for g in first:
        second.update(m.face_neighbors(g))
    second.discard(f)
    return second - first


def step1_monochromatic(
    m: NormalMap, spiral: SpiralOrder, report: Optional[RunReport] = None
) -> List[int]:
    """Maximal brown set along the spiral; outer region first."""
    colors = blank_coloring(m)
    pos = spiral.positions
    colors[m.outer_face] = BROWN
    if report:
        report.log(f"step1 face={m.outer_face} color=brown rule=outer-region")
    last = m.outer_face
    while True:
        eligible = [
            f
            for f in range(m.face_count)
            if colors[f] == WHITE
            and all(colors[g] != BROWN for g in m.face_neighbors(f))
        ]
        if not eligible:
            break
        near = _second_neighborhood(m, last)
        pool = [f for f in eligible if f in near]
        rule = "second-neighborhood-max-sides"
        if pool:
            pick = max(pool, key=lambda f: (m.face_size(f), -pos[f], -f))
        else:
            ahead = min(eligible, key=lambda f: pos[f])
            pool = [f for f in eligible if f in _second_neighborhood(m, ahead)]
            pool.append(ahead)
            pick = max(pool, key=lambda f: (m.face_size(f), -pos[f], -f))
            rule = "spiral-advance-max-sides"
        colors[pick] = BROWN
        if report:
            report.log(f"step1 face={pick} color=brown rule={rule}")
        last = pick
    if report:
        report.brown = [f for f, c in enumerate(colors) if c == BROWN]
    return colors


class _SubmapParity:
    """Union-find over colored regions tracking member size-parity sums."""

    def __init__(self, m: NormalMap, colors: Sequence[int]):
        self.m = m
        self.parent: Dict[int, int] = {}
        self.parity: Dict[int, int] = {}
        for f in range(m.face_count):
            if colors[f] != WHITE:
                self.parent[f] = f
                self.parity[f] = m.face_size(f) % 2
        for f in range(m.face_count):
            if colors[f] == WHITE:
                continue
            for g in m.face_neighbors(f):
                if g > f and colors[g] != WHITE:
                    self.union(f, g)

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.parity[ra] = (self.parity[ra] + self.parity[rb]) % 2

    def merged_parity(self, face: int, colored_neighbors: Sequence[int]) -> int:
        total = self.m.face_size(face) % 2
        for r in {self.find(g) for g in colored_neighbors}:
            total = (total + self.parity[r]) % 2
        return total

    def add(self, face: int, colored_neighbors: Sequence[int]) -> None:
        self.parent[face] = face
        self.parity[face] = self.m.face_size(face) % 2
        for g in colored_neighbors:
            self.union(face, g)


def _seals_a_spot(m: NormalMap, colors: List[int], g: int, spots: Set[int]) -> bool:
    """Would greening ``g`` leave some spot with all three regions blocked?

    A spot vertex dies only when one of its three regions gets colored, and
    a region with a green neighbor can never be greened, so a spot whose
    three regions all carry green neighbors is stuck forever.
    """
    colors[g] = GREEN
    try:
        for v in spots:
            faces = m.faces_at_vertex(v)
            if any(colors[f] != WHITE for f in faces):
                continue
            if all(
                any(colors[h] == GREEN for h in m.face_neighbors(f))
                for f in faces
            ):
                return True
        return False
    finally:
        colors[g] = WHITE


def step2_dichromatic(
    m: NormalMap,
    brown_colors: Sequence[int],
    spiral: SpiralOrder,
    report: Optional[RunReport] = None,
) -> List[int]:
    """Add a maximal green set; spot priority first, parity guard second.

    Candidates that would seal a surviving spot are deferred; candidates
    whose merged colored sub-map would turn odd-parity are deferred unless
    spots force the issue.  Raises Stuck when spot vertices survive every
    admissible assignment.
    """
    colors = list(brown_colors)
    pos = spiral.positions
    tracker = _SubmapParity(m, colors)
    while True:
        eligible = [
            f
            for f in range(m.face_count)
            if colors[f] == WHITE
            and all(colors[g] != GREEN for g in m.face_neighbors(f))
        ]
        if not eligible:
            break
        spots = compute_spots(m, colors)
        ranked = sorted(
            eligible,
            key=lambda f: (
                -spot_count_on_face(m, f, spots),
                m.face_size(f) % 2,
                pos[f],
                f,
            ),
        )
        pick = None
        rule = "spot-priority"
        deferred = []
        for f in ranked:
            nbrs = [g for g in m.face_neighbors(f) if colors[g] != WHITE]
            parity_ok = tracker.merged_parity(f, nbrs) == 0
            seals = _seals_a_spot(m, colors, f, spots)
            if parity_ok and not seals:
                pick = f
                break
            deferred.append((f, parity_ok, seals))
        if pick is None:
            if spots:
                for f, parity_ok, seals in deferred:
                    if not seals:
                        pick = f
                        rule = "parity-guard-overridden"
                        break
                if pick is None:
                    pick = deferred[0][0]
                    rule = "spot-priority-overrides-guards"
            if pick is None:
                break
            if report:
                report.log(f"step2 conflict face={pick} rule={rule}")
        nbrs = [g for g in m.face_neighbors(pick) if colors[g] != WHITE]
        colors[pick] = GREEN
        tracker.add(pick, nbrs)
        if report:
            report.log(
                f"step2 face={pick} color=green rule={rule} "
                f"spots={spot_count_on_face(m, pick, spots)}"
            )
    if compute_spots(m, colors):
        planned = _plan_spot_cover(m, list(brown_colors))
        if planned is None:
            raise Stuck(
                "green assignment exhausted with spot vertices remaining"
            )
        if report:
            report.log("step2 rescue=exact-spot-cover")
        colors = _extend_greens(m, planned, pos, tracker=None)
    if report:
        report.green = [f for f, c in enumerate(colors) if c == GREEN]
    return colors


def _plan_spot_cover(m: NormalMap, colors: List[int]) -> Optional[List[int]]:
    """Complete search for an independent green set killing every spot.

    Branches on the spot with the fewest viable regions; a viable region is
    white with no green neighbor.  Returns the colors with the chosen
    greens applied, or None when no cover exists for this brown set.
    """

    def viable(colors_, v):
        return [
            f
            for f in m.faces_at_vertex(v)
            if colors_[f] == WHITE
            and all(colors_[g] != GREEN for g in m.face_neighbors(f))
        ]

    def solve(colors_) -> Optional[List[int]]:
        spots = compute_spots(m, colors_)
        if not spots:
            return colors_
        v = min(spots, key=lambda s: (len(viable(colors_, s)), s))
        options = viable(colors_, v)
        options.sort(key=lambda f: (m.face_size(f) % 2, f))
        for f in options:
            nxt = list(colors_)
            nxt[f] = GREEN
            found = solve(nxt)
            if found is not None:
                return found
        return None

    return solve(colors)


def _extend_greens(m, colors, pos, tracker) -> List[int]:
    """Greedy maximal green extension of a spot-free coloring."""
    colors = list(colors)
    tracker = _SubmapParity(m, colors)
    while True:
        eligible = [
            f
            for f in range(m.face_count)
            if colors[f] == WHITE
            and all(colors[g] != GREEN for g in m.face_neighbors(f))
        ]
        pick = None
        for f in sorted(eligible, key=lambda f: (m.face_size(f) % 2, pos[f], f)):
            nbrs = [g for g in m.face_neighbors(f) if colors[g] != WHITE]
            if tracker.merged_parity(f, nbrs) == 0:
                pick = f
                break
        if pick is None:
            return colors
        nbrs = [g for g in m.face_neighbors(pick) if colors[g] != WHITE]
        colors[pick] = GREEN
        tracker.add(pick, nbrs)


def kempe_switch_faces(
    m: NormalMap,
    colors: Sequence[int],
    start_face: int,
    pair: Tuple[int, int],
) -> List[int]:
    """Exchange the pair's colors on the component containing ``start_face``.

    For two non-white colors this preserves properness; a pair including
    white can merge white runs into a color, so callers validate results.
    """
    a, b = pair
    if colors[start_face] not in pair:
        raise ImproperInput("start face does not carry a pair color")
    comp = {start_face}
    stack = [start_face]
    while stack:
        f = stack.pop()
        for g in m.face_neighbors(f):
            if colors[g] in pair and g not in comp:
                comp.add(g)
                stack.append(g)
    out = list(colors)
    for f in comp:
        out[f] = b if colors[f] == a else a
    return out


def _no_new_problems(m: NormalMap, colors: Sequence[int]) -> bool:
    return is_proper(m, colors) and not compute_spots(m, colors)


def block_odd_ring(
    m: NormalMap,
    colors: Sequence[int],
    ring_faces: Sequence[int],
    budget: Optional[List[int]] = None,
) -> List[int]:
    """Recolor one region of an odd white cycle brown or green.

    Mirrors the per-ring re-coloring argument: a ring region with no
    obstacle of the target color is colored directly; otherwise obstacles
    are attacked with (target, white) component switches, and the square
    case additionally tries a single (brown, green) switch.  Every
    candidate result must stay proper and spot-free and actually shorten
    the odd cycle structure; otherwise BlockingFailed is raised.
    """
    if hasattr(ring_faces, "faces"):
        ring_faces = ring_faces.faces
    spend = budget if budget is not None else [len(ring_faces) ** 2]

    def charge() -> bool:
        spend[0] -= 1
        return spend[0] >= 0

    ring = set(ring_faces)
    order = sorted(ring_faces, key=lambda f: (m.face_size(f), f))
    for r_w in order:
        for target in (BROWN, GREEN):
            if not charge():
                raise BlockingFailed("switch budget exhausted")
            attempt = _try_recolor(m, colors, r_w, target, ring, charge)
            if attempt is not None:
                return attempt
    raise BlockingFailed("no admissible re-coloring for the odd ring")


def _try_recolor(m, colors, r_w, target, ring, charge) -> Optional[List[int]]:
    if colors[r_w] != WHITE:
        return None
    work = list(colors)
    # Brown/green component switches may clear target-colored obstacles
    # outright (the square case of the re-coloring argument).
    for g in list(m.face_neighbors(r_w)):
        if work[g] != target:
            continue
        if not charge():
            raise BlockingFailed("switch budget exhausted")
        switched = kempe_switch_faces(m, work, g, (BROWN, GREEN))
        if sum(switched[h] == target for h in m.face_neighbors(r_w)) < sum(
            work[h] == target for h in m.face_neighbors(r_w)
        ):
            work = switched
    # Remaining obstacles: (target, white) chains confined to the ring's
    # inside (the ring separates the map, so chains stay on one side).
    for g in list(m.face_neighbors(r_w)):
        if work[g] != target:
            continue
        comp = _pair_component(m, work, g, (target, WHITE), forbidden=ring)
        if not charge():
            raise BlockingFailed("switch budget exhausted")
        switched = list(work)
        for f in comp:
            switched[f] = WHITE if work[f] == target else target
        if is_proper(m, switched) and not compute_spots(m, switched):
            work = switched
    if any(work[g] == target for g in m.face_neighbors(r_w)):
        # Last resort: color the ring region anyway and push its obstacles
        # back to white, then repair any spots by re-coloring around them
        # (the island-joining transformation of the blocking discussion).
        if not charge():
            raise BlockingFailed("switch budget exhausted")
        work2 = list(work)
        for g in m.face_neighbors(r_w):
            if work2[g] == target:
                work2[g] = WHITE
        work2[r_w] = target
        work2 = _repair_spots(m, work2)
        if (
            work2 is not None
            and is_proper(m, work2)
            and not compute_spots(m, work2)
        ):
            return work2
        return None
    work[r_w] = target
    if not is_proper(m, work) or compute_spots(m, work):
        return None
    return work


def _repair_spots(m, colors) -> Optional[List[int]]:
    colors = list(colors)
    for _ in range(m.face_count):
        spots = compute_spots(m, colors)
        if not spots:
            return colors
        progress = False
        for v in sorted(spots):
            for f in m.faces_at_vertex(v):
                if colors[f] != WHITE:
                    continue
                for c in (GREEN, BROWN):
                    if all(colors[g] != c for g in m.face_neighbors(f)):
                        colors[f] = c
                        progress = True
                        break
                if progress:
                    break
            if progress:
                break
        if not progress:
            return None
    return None


def _pair_component(m, colors, start, pair, forbidden=frozenset()) -> Set[int]:
    comp = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for g in m.face_neighbors(f):
            if colors[g] in pair and g not in comp and g not in forbidden:
                comp.add(g)
                stack.append(g)
    return comp


def step3_complete(
    m: NormalMap, colors: Sequence[int], report: Optional[RunReport] = None
) -> List[int]:
    """2-color the white regions light/dark blue; they must form a forest."""
    out = list(colors)
    graph = white_subgraph(m, colors)
    for comp in white_components(m, colors):
        root = comp[0]
        out[root] = LIGHT_BLUE
        queue = [root]
        seen = {root}
        while queue:
            f = queue.pop(0)
            for g in graph[f]:
                if g not in seen:
                    seen.add(g)
                    out[g] = (
                        DARK_BLUE if out[f] == LIGHT_BLUE else LIGHT_BLUE
                    )
                    queue.append(g)
                elif out[g] == out[f]:
                    raise NotBipartite(
                        f"odd white cycle through regions {f} and {g}"
                    )
        if report:
            report.log(f"step3 component={comp} colored=blue-pair")
    return out


def four_color(
    m: NormalMap,
    strict: bool = False,
    direction: str = "cw",
    report: Optional[RunReport] = None,
) -> Tuple[List[int], RunReport]:
    """Full pipeline: contract, spiral, three steps, blocking, expand.

    In default mode a heuristic failure falls back to the exact oracle and
    the report says so; in strict mode it raises HeuristicFailed instead.
    The returned coloring is verified proper before returning.
    """
    from .oracle import backtrack_four_color, verify_proper

    rep = report if report is not None else RunReport()
    result = contract_small_faces(m)
    work = result.map
    rep.degenerate = result.degenerate
    if result.log.steps:
        rep.log(
            f"contraction steps={len(result.log.steps)} "
            f"degenerate={result.degenerate} residue_faces={work.face_count}"
        )
    inner: Optional[List[int]] = None
    if result.degenerate or work.face_count <= 4:
        inner = [BROWN + i for i in range(work.face_count)]
        rep.log(f"trivial residue: {work.face_count} regions, distinct colors")
    else:
        other = "ccw" if direction == "cw" else "cw"
        outers = sorted(
            range(work.face_count),
            key=lambda f: (-work.face_size(f), f),
        )
        attempts = [(direction, work.outer_face), (other, work.outer_face)]
        for o in outers:
            if o != work.outer_face and len(attempts) < 8:
                attempts.append((direction, o))
                attempts.append((other, o))
        last_exc: Optional[Exception] = None
        for attempt, (dirn, outer) in enumerate(attempts):
            try:
                inner = _run_steps(work.with_outer_face(outer), dirn, rep)
                if attempt:
                    rep.log(
                        f"retry direction={dirn} outer={outer} succeeded"
                    )
                break
            except (Stuck, BlockingFailed, NotBipartite) as exc:
                last_exc = exc
                rep.log(
                    f"steps failed direction={dirn} outer={outer} "
                    f"reason={type(exc).__name__}: {exc}"
                )
        if inner is None:
            if strict:
                raise HeuristicFailed(str(last_exc)) from last_exc
            rep.fallback = True
            rep.fallback_reason = (
                f"{type(last_exc).__name__}: {last_exc}"
            )
            rep.log(f"fallback reason={rep.fallback_reason}")
    if inner is None:
        adj = work.dual_adjacency()
        found = backtrack_four_color(adj)
        if found is None:
            raise HeuristicFailed("oracle found no 4-coloring (impossible)")
        inner = found
    colors = expand_small_faces(inner, result.log)
    rep.colors_used = colors_used(colors)
    rep.verified = verify_proper(m.dual_adjacency(), colors)
    rep.log(f"verified={rep.verified} colors_used={rep.colors_used}")
    if not rep.verified:
        raise HeuristicFailed("final verification failed")
    return colors, rep


def _run_steps(work: NormalMap, direction: str, rep: RunReport) -> List[int]:
    spiral = spiral_order(work, direction)
    rep.spiral_chains = [len(c) for c in spiral.chains]
    rep.log(f"spiral direction={direction} chains={rep.spiral_chains}")
    c1 = step1_monochromatic(work, spiral, rep)
    c2 = step2_dichromatic(work, c1, spiral, rep)
    c2 = _blocking_loop(work, c2, rep)
    submaps = colored_submaps(work, c2)
    islands = detect_islands(work, c2)
    odd_islands = [f for f in islands if work.face_size(f) % 2 == 1]
    rep.log(
        f"submaps={len(submaps)} islands={islands} odd_islands={odd_islands}"
    )
    return step3_complete(work, c2, rep)


def _blocking_loop(
    m: NormalMap, colors: List[int], rep: RunReport
) -> List[int]:
    budget = [m.face_count * m.face_count]
    while True:
        cyc = odd_white_cycle(m, colors)
        if cyc is None:
            return colors
        rep.rings_found += 1
        rep.log(f"odd-ring detected faces={cyc}")
        colors = block_odd_ring(m, colors, cyc, budget)
        rep.rings_blocked += 1
        rep.log(f"odd-ring blocked faces={cyc}")
