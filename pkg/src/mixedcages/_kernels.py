"""Shortest-mixed-cycle search kernel.

The graph is flattened into a CSR table of *darts*: one directed
traversal per arc, two per edge.  Dart d leaves ``tails[d]`` toward
``heads[d]`` along link ``links[d]`` (both darts of an edge share a
link id, so forbidding a repeated link id between consecutive darts is
exactly the no-immediate-backtrack rule; an arc can never repeat
consecutively because its link only appears on one dart).

`_girth_scan` runs, for every origin vertex, a breadth-first search
over dart states seeded with all darts leaving the origin.  The first
walk that re-enters the origin closes the shortest locally
non-backtracking closed walk through it; the minimum over origins is
the exact mixed girth, and at the minimum the closed walk is always a
cycle (a repeated vertex inside a shortest such walk would yield a
strictly shorter one through another origin).  A shrinking global
bound prunes every later search to depth best-2.

The same function body is compiled with numba when available; set
MIXEDCAGES_NO_NUMBA=1 to force the pure-Python/numpy path.
"""

from __future__ import annotations

import os

import numpy as np

NUMBA_ENV_FLAG = "MIXEDCAGES_NO_NUMBA"


def _girth_scan(n, indptr, heads, links, bound):
    """Return (best, witness_darts, witness_len).

    bound is the longest acceptable cycle length; best = 0 means no
    cycle of length <= bound exists.  witness_darts[:witness_len] lists
    the darts of one shortest cycle in traversal order.
    """
    ndarts = heads.shape[0]
    stamp = np.full(ndarts, -1, dtype=np.int64)
    depth = np.zeros(ndarts, dtype=np.int64)
    parent = np.zeros(ndarts, dtype=np.int64)
    queue = np.zeros(ndarts, dtype=np.int64)
    wit = np.zeros(n + 2, dtype=np.int64)
    wlen = 0
    best = bound + 1
    for origin in range(n):
        maxlen = best - 1  # only strictly shorter returns are useful
        if maxlen < 2:
            break
        qhead = 0
        qtail = 0
        for d in range(indptr[origin], indptr[origin + 1]):
            stamp[d] = origin
            depth[d] = 1
            parent[d] = -1
            queue[qtail] = d
            qtail += 1
        done = False
        while qhead < qtail and not done:
            d = queue[qhead]
            qhead += 1
            t = depth[d]
            if t + 1 > maxlen:
                break
            v = heads[d]
            lk = links[d]
            grow = t + 1 <= maxlen - 1
            for d2 in range(indptr[v], indptr[v + 1]):
                if links[d2] == lk:
                    continue
                w = heads[d2]
                if w == origin:
                    best = t + 1
                    wlen = best
                    pos = best - 2
                    cur = d
                    while cur != -1:
                        wit[pos] = cur
                        pos -= 1
                        cur = parent[cur]
                    wit[best - 1] = d2
                    done = True
                    break
                if grow and stamp[d2] != origin:
                    stamp[d2] = origin
                    depth[d2] = t + 1
                    parent[d2] = d
                    queue[qtail] = d2
                    qtail += 1
    if best > bound:
        return 0, wit, 0
    return best, wit, wlen


girth_scan_python = _girth_scan


def _numba_wanted() -> bool:
    return os.environ.get(NUMBA_ENV_FLAG, "").strip().lower() in ("", "0", "false", "no")


girth_scan_numba = None
if _numba_wanted():
    try:
        from numba import njit

        girth_scan_numba = njit(cache=True)(_girth_scan)
    except ImportError:
        girth_scan_numba = None


def get_kernel(backend: str | None = None):
    """Select the girth kernel: "numba", "python", or None/"auto"."""
    if backend in (None, "auto"):
        return girth_scan_numba if girth_scan_numba is not None else girth_scan_python
    if backend == "numba":
        if girth_scan_numba is None:
            raise RuntimeError(
                "numba backend unavailable (not installed or disabled via "
                f"{NUMBA_ENV_FLAG})")
        return girth_scan_numba
    if backend == "python":
        return girth_scan_python
    raise ValueError(f"unknown backend {backend!r}")
