"""Backend selection for the search kernels.

The compiled extension ``fourcolor._ckernels`` is preferred when present;
the pure-Python twin ``fourcolor._pykernels`` is the fallback.  Setting the
environment variable ``FOURCOLOR_PURE=1`` forces the fallback, which is how
the benchmark compares the two.
"""

from __future__ import annotations

import os
from typing import Dict, List, Sequence, Tuple

if os.environ.get("FOURCOLOR_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND

kcolor_first = _impl.kcolor_first
equitable_first = _impl.equitable_first
hamiltonian_cycle = _impl.hamiltonian_cycle
strong_first = _impl.strong_first


def to_csr(adjacency: Sequence[Sequence[int]] | Dict[int, Sequence[int]]):
    """Normalize an adjacency structure to (n, offsets, neighbors).

    Dict keys may be arbitrary ints; they are relabeled in sorted order and
    the label map is returned as the fourth element.
    """
    if isinstance(adjacency, dict):
        keys = sorted(adjacency)
        index = {v: i for i, v in enumerate(keys)}
        lists = [[index[w] for w in adjacency[v]] for v in keys]
    else:
        keys = list(range(len(adjacency)))
        index = {v: v for v in keys}
        lists = [list(nbrs) for nbrs in adjacency]
    offsets = [0]
    neighbors: List[int] = []
    for nbrs in lists:
        neighbors.extend(sorted(nbrs))
        offsets.append(len(neighbors))
    return len(lists), offsets, neighbors, index
