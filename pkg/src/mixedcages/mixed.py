"""Simple mixed graphs: undirected edges plus directed arcs.

Simplicity rules: no loops, at most one edge per unordered pair, at
most one arc per ordered pair, and never an edge and an arc between the
same two vertices.  Antiparallel arcs (a digon) are legal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfRangeError, SimplicityViolationError

__all__ = [
    "MixedGraph",
    "DegreeProfile",
    "HqParams",
    "build_circulant_digraph",
    "jump_count",
    "build_hq",
    "degree_profile",
    "induced_subgraph",
]


class MixedGraph:
    """Mixed graph on vertices 0..n-1.

    Stores the edge set (unordered pairs, kept as (min, max) tuples),
    the arc set (ordered pairs), and adjacency lists for queries.
    Insertion rejects anything that would break simplicity; a silent
    collision here would falsify a construction downstream.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.edges: set[tuple[int, int]] = set()
        self.arcs: set[tuple[int, int]] = set()
        self.edge_nbrs: list[list[int]] = [[] for _ in range(n)]
        self.arc_out: list[list[int]] = [[] for _ in range(n)]
        self.arc_in: list[list[int]] = [[] for _ in range(n)]

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"vertex out of range: ({u},{v}) with n={self.n}")
        if u == v:
            raise SimplicityViolationError(f"loop at vertex {u}")

    def add_edge(self, u: int, v: int) -> None:
        self._check_pair(u, v)
        key = (u, v) if u < v else (v, u)
        if key in self.edges:
            raise SimplicityViolationError(f"duplicate edge {key}")
        if (u, v) in self.arcs or (v, u) in self.arcs:
            raise SimplicityViolationError(f"edge {key} parallel to an arc")
        self.edges.add(key)
        self.edge_nbrs[u].append(v)
        self.edge_nbrs[v].append(u)

    def add_arc(self, u: int, v: int) -> None:
        self._check_pair(u, v)
        if (u, v) in self.arcs:
            raise SimplicityViolationError(f"duplicate arc ({u},{v})")
        key = (u, v) if u < v else (v, u)
        if key in self.edges:
            raise SimplicityViolationError(f"arc ({u},{v}) parallel to an edge")
        self.arcs.add((u, v))
        self.arc_out[u].append(v)
        self.arc_in[v].append(u)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def copy(self) -> "MixedGraph":
        g = MixedGraph(self.n)
        for u, v in self.edges:
            g.add_edge(u, v)
        for u, v in self.arcs:
            g.add_arc(u, v)
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges
                and self.arcs == other.arcs)

    def __repr__(self) -> str:
        return (f"MixedGraph(n={self.n}, edges={len(self.edges)}, "
                f"arcs={len(self.arcs)})")


@dataclass(frozen=True)
class HqParams:
    """Parameters of the girth-5 augmentation for field order q."""
    q: int
    k: int
    R: int
    xi: int


class DegreeProfile:
    """Per-vertex (in-arc degree, out-arc degree, edge degree)."""

    def __init__(self, indeg: np.ndarray, outdeg: np.ndarray, edeg: np.ndarray):
        self.indeg = indeg
        self.outdeg = outdeg
        self.edeg = edeg

    def at(self, v: int) -> tuple[int, int, int]:
        return int(self.indeg[v]), int(self.outdeg[v]), int(self.edeg[v])

    def constant(self) -> tuple[int, int, int] | None:
        """The common (z, z', r) triple, or None if degrees vary."""
        if len(self.indeg) == 0:
            return None
        t = self.at(0)
        n = len(self.indeg)
        for v in range(1, n):
            if self.at(v) != t:
                return None
        return t


def degree_profile(g: MixedGraph) -> DegreeProfile:
    indeg = np.zeros(g.n, dtype=np.int64)
    outdeg = np.zeros(g.n, dtype=np.int64)
    edeg = np.zeros(g.n, dtype=np.int64)
    for u, v in g.arcs:
        outdeg[u] += 1
        indeg[v] += 1
    for u, v in g.edges:
        edeg[u] += 1
        edeg[v] += 1
    return DegreeProfile(indeg, outdeg, edeg)


def induced_subgraph(g: MixedGraph, keep) -> MixedGraph:
    """Subgraph on the kept vertices, reindexed by ascending old index."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range")
    remap = {old: new for new, old in enumerate(kept)}
    sub = MixedGraph(len(kept))
    for u, v in g.edges:
        if u in remap and v in remap:
            sub.add_edge(remap[u], remap[v])
    for u, v in g.arcs:
        if u in remap and v in remap:
            sub.add_arc(remap[u], remap[v])
    return sub


def build_circulant_digraph(n: int, jumps) -> MixedGraph:
    """Circulant digraph on Z_n with arcs a -> a + j (mod n) per jump j.

    The jump set must not create digons or parallel arcs: jumps are
    distinct values in 1..n-1, no jump equals n/2, and no two jumps
    (including a jump with itself) sum to n.
    """
    jumps = list(jumps)
    if n < 2:
        raise ValueError("circulant needs n >= 2")
    if not jumps:
        raise ValueError("jump set must be nonempty")
    for j in jumps:
        if not 1 <= j <= n - 1:
            raise ValueError(f"jump {j} outside 1..{n - 1}")
    if len(set(jumps)) != len(jumps):
        raise SimplicityViolationError("repeated jump gives parallel arcs")
    jumpset = set(jumps)
    for j in jumpset:
        if 2 * j == n:
            raise SimplicityViolationError(
                f"jump {j} = n/2 gives antiparallel arcs")
        if (n - j) in jumpset:
            raise SimplicityViolationError(
                f"jumps {j} and {n - j} give antiparallel arcs")
    g = MixedGraph(n)
    for a in range(n):
        for j in jumps:
            g.add_arc(a, (a + j) % n)
    return g


def jump_count(q: int) -> tuple[int, int]:
    """The (k, R) with q - 1 = 4k + R, k >= 1, 1 <= R <= 5.

    For prime powers q >= 7 the pair is unique (q - 1 is even or
    congruent to 3 mod 4, which pins R to {2, 3, 4}); k is
    floor((q - 2) / 4).
    """
    if q < 7:
        raise OutOfRangeError(f"q={q}: need q >= 7 for k >= 1 with R <= 5")
    k = (q - 2) // 4
    R = (q - 1) - 4 * k
    assert k >= 1 and 1 <= R <= 5 and q - 1 == 4 * k + R
    return k, R


def build_hq(field):
    """Augment the semiplane graph with the four circulant arc families.

    For every jump length i in 1..k, adds arcs
      (x, y) -> (x*xi^i, y)        within each affine-point part,
      L_x    -> L_(x*xi^i)         within the vertical-line part,
      [m, b] -> [m/xi^i, b]        within each affine-line part,
      P_m    -> P_(m/xi^i)         within the slope-point part.

    Returns (LabeledGraph, HqParams).
    """
    from .plane import build_semiplane  # deferred: plane imports this module

    q = field.q
    k, R = jump_count(q)
    lg = build_semiplane(field)
    g = lg.graph
    idx = lg.index_of
    for i in range(1, k + 1):
        step = field.pow_xi(i)
        inv_step = field.inv(step)
        for y in field.elements():
            for x in field.units():
                g.add_arc(idx("P", x, y), idx("P", field.mul(x, step), y))
        for b in field.elements():
            for m in field.units():
                g.add_arc(idx("L", m, b), idx("L", field.mul(m, inv_step), b))
        for x in field.units():
            g.add_arc(idx("VL", x), idx("VL", field.mul(x, step)))
        for m in field.units():
            g.add_arc(idx("SP", m), idx("SP", field.mul(m, inv_step)))
    return lg, HqParams(q=q, k=k, R=R, xi=field.xi)
