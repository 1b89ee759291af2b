#!/usr/bin/env python3
"""Compare the compiled kernel backend against the pure-Python fallback.

Run from the repository root after an editable install:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import json
import subprocess
import sys
import time

CASES = """
import time, sys, json
from fourcolor.kernels import to_csr, kcolor_first, equitable_first, \\
    hamiltonian_cycle, strong_first, BACKEND
from fourcolor.corpus import corpus_instance
from fourcolor.triangulations import random_triangulation

results = {"backend": BACKEND}

tutte = corpus_instance("tutte").map
adj = tutte.embedding.adjacency()
n, o, nb, _ = to_csr(adj)
t0 = time.perf_counter()
status, _ = hamiltonian_cycle(n, o, nb)
results["tutte_hamiltonian_s"] = time.perf_counter() - t0
assert status == 0

dual = tutte.dual_adjacency()
n, o, nb, _ = to_csr(dual)
t0 = time.perf_counter()
status, _ = strong_first(n, o, nb)
results["tutte_strong_none_s"] = time.perf_counter() - t0
assert status == 0

gard = corpus_instance("gardner").map
n, o, nb, _ = to_csr(gard.embedding.adjacency())
t0 = time.perf_counter()
status, _ = hamiltonian_cycle(n, o, nb, 2_000_000)
results["gardner_hamiltonian_s"] = time.perf_counter() - t0
assert status == 1

t0 = time.perf_counter()
for seed in range(1, 30):
    rot = random_triangulation(16, seed)
    n, o, nb, _ = to_csr({v: list(ns) for v, ns in rot.items()})
    equitable_first(n, o, nb)
results["equitable_16v_x29_s"] = time.perf_counter() - t0

print(json.dumps(results))
"""


def run(pure: bool) -> dict:
    import os

    env = dict(os.environ)
    if pure:
        env["FOURCOLOR_PURE"] = "1"
    else:
        env.pop("FOURCOLOR_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", CASES], capture_output=True, text=True, env=env
    )
    if out.returncode != 0:
        raise SystemExit(out.stderr)
    return json.loads(out.stdout)


def main() -> None:
    compiled = run(pure=False)
    pure = run(pure=True)
    print(f"{'case':28s} {compiled['backend']:>10s} {pure['backend']:>10s} {'speedup':>8s}")
    for key in compiled:
        if key == "backend":
            continue
        c, p = compiled[key], pure[key]
        print(f"{key:28s} {c:10.3f} {p:10.3f} {p / max(c, 1e-9):7.1f}x")


if __name__ == "__main__":
    main()
