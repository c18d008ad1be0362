"""Exact mixed girth with cycle witnesses, plus brute-force oracles.

A mixed cycle is a closed walk (v_0, ..., v_{g-1}) with pairwise
distinct vertices in which every step follows an edge (either way) or
an arc (forward only); a length-2 cycle must use two distinct links, so
walking an edge back and forth does not count, while a digon of two
antiparallel arcs does.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import MissingPartitionError, TemplateInvalidError, TooLargeError
from .mixed import MixedGraph

__all__ = [
    "CycleWitness",
    "GirthReport",
    "mixed_girth",
    "validate_witness",
    "enumerate_short_cycles",
    "count_mixed_4cycles_casewise",
    "CaseCount",
    "find_exemplar_5cycle",
]


@dataclass(frozen=True)
class CycleWitness:
    """A cycle as its vertex sequence plus per-step link kinds.

    Step i goes from vertices[i] to vertices[(i+1) % len] along an
    edge ("E") or an arc ("A")."""
    vertices: tuple[int, ...]
    kinds: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class GirthReport:
    """Mixed girth plus a witness cycle.

    girth is None when the graph has no cycle of length <= cutoff
    (no cycle at all when cutoff is None)."""
    girth: int | None
    witness: CycleWitness | None
    cutoff: int | None = None

    @property
    def is_infinite(self) -> bool:
        return self.girth is None


class _DartTable:
    """Flat CSR of darts sorted per tail vertex by head: two darts per
    edge sharing a link id in 0..E-1, one per arc with id E..E+A-1."""

    def __init__(self, g: MixedGraph):
        edges = sorted(g.edges)
        arcs = sorted(g.arcs)
        self.num_edges = len(edges)
        rows: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        for lid, (u, v) in enumerate(edges):
            rows[u].append((v, lid))
            rows[v].append((u, lid))
        for aid, (u, v) in enumerate(arcs):
            rows[u].append((v, self.num_edges + aid))
        indptr = np.zeros(g.n + 1, dtype=np.int64)
        heads = np.zeros(2 * len(edges) + len(arcs), dtype=np.int64)
        links = np.zeros_like(heads)
        tails = np.zeros_like(heads)
        pos = 0
        for v, row in enumerate(rows):
            row.sort()
            for head, link in row:
                heads[pos] = head
                links[pos] = link
                tails[pos] = v
                pos += 1
            indptr[v + 1] = pos
        self.indptr = indptr
        self.heads = heads
        self.links = links
        self.tails = tails


def mixed_girth(g: MixedGraph, cutoff: int | None = None,
                backend: str | None = None) -> GirthReport:
    """Exact length of the shortest mixed cycle, with a validated
    witness.

    With a cutoff, a girth above it is reported as infinite (girth
    None); values <= cutoff are exact either way.  backend selects the
    jit-compiled or pure-Python kernel ("auto" default).
    """
    if cutoff is not None and cutoff < 2:
        raise ValueError("cutoff must be at least 2")
    bound = g.n if cutoff is None else min(cutoff, g.n)
    if g.n < 2 or (not g.edges and not g.arcs):
        return GirthReport(None, None, cutoff)
    table = _DartTable(g)
    kernel = _kernels.get_kernel(backend)
    best, wit, wlen = kernel(g.n, table.indptr, table.heads, table.links, bound)
    if best == 0:
        return GirthReport(None, None, cutoff)
    darts = [int(wit[i]) for i in range(wlen)]
    vertices = [int(table.tails[darts[0]])]
    vertices += [int(table.heads[d]) for d in darts[:-1]]
    kinds = tuple("E" if table.links[d] < table.num_edges else "A" for d in darts)
    witness = CycleWitness(tuple(vertices), kinds)
    validate_witness(g, witness)
    return GirthReport(int(best), witness, cutoff)


def validate_witness(g: MixedGraph, w: CycleWitness) -> None:
    """Check a witness against the graph itself, independently of any
    search: distinct vertices, every step on an existing link with the
    right kind and direction, no single-edge 2-cycle.  Raises ValueError."""
    n = len(w.vertices)
    if n < 2:
        raise ValueError("cycle needs at least 2 vertices")
    if len(w.kinds) != n:
        raise ValueError("one link kind per step required")
    if len(set(w.vertices)) != n:
        raise ValueError("witness vertices must be pairwise distinct")
    for i in range(n):
        u = w.vertices[i]
        v = w.vertices[(i + 1) % n]
        kind = w.kinds[i]
        if kind == "E":
            if not g.has_edge(u, v):
                raise ValueError(f"step {i}: no edge {u}-{v}")
        elif kind == "A":
            if not g.has_arc(u, v):
                raise ValueError(f"step {i}: no arc ({u},{v})")
        else:
            raise ValueError(f"step {i}: unknown link kind {kind!r}")
    if n == 2 and w.kinds == ("E", "E"):
        # both steps necessarily reuse the one edge between the pair
        raise ValueError("a single edge walked back and forth is not a cycle")


def enumerate_short_cycles(g: MixedGraph, maxlen: int) -> list[CycleWitness]:
    """All mixed cycles of length <= maxlen, by exhaustive simple-path
    search.  One representative per cyclic rotation; traversal
    directions are distinct cycles except that the two directions of an
    all-edge cycle are identified.  Guarded to n <= 64.
    """
    if g.n > 64:
        raise TooLargeError(f"enumeration limited to 64 vertices, got {g.n}")
    adj: list[list[tuple[int, str]]] = [[] for _ in range(g.n)]
    for u, v in sorted(g.edges):
        adj[u].append((v, "E"))
        adj[v].append((u, "E"))
    for u, v in sorted(g.arcs):
        adj[u].append((v, "A"))
    for row in adj:
        row.sort()

    cycles: list[CycleWitness] = []
    path: list[int] = []
    kinds: list[str] = []
    on_path = [False] * g.n

    def extend(v0: int, v: int) -> None:
        for w, kind in adj[v]:
            if w == v0 and len(path) >= 2:
                if len(path) == 2 and kind == "E" and kinds[0] == "E":
                    continue  # same edge twice
                if ("A" not in kinds and kind != "A"
                        and len(path) >= 3 and path[1] > path[-1]):
                    continue  # reflection of an all-edge cycle
                cycles.append(CycleWitness(tuple(path), tuple(kinds) + (kind,)))
            elif w > v0 and not on_path[w] and len(path) < maxlen:
                path.append(w)
                kinds.append(kind)
                on_path[w] = True
                extend(v0, w)
                on_path[w] = False
                kinds.pop()
                path.pop()

    if maxlen >= 2:
        for v0 in range(g.n):
            path.append(v0)
            on_path[v0] = True
            extend(v0, v0)
            on_path[v0] = False
            path.pop()
    cycles.sort(key=lambda c: (len(c), c.vertices, c.kinds))
    return cycles


# ----------------------------------------------------------------------
# Structure-aware 4-cycle census for the augmented semiplane
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CaseCount:
    """One shape of a would-be 4-cycle: how many candidate
    configurations exist and how many actually close."""
    name: str
    candidates: int
    closed: int


def _point_line_sides(lg):
    points = [v for v in range(lg.graph.n) if lg.labels[v].kind in ("P", "SP")]
    lines = [v for v in range(lg.graph.n) if lg.labels[v].kind in ("L", "VL")]
    return points, lines


def _edges_only_alternating(lg) -> CaseCount:
    # common-neighbour counting over the bipartite edge adjacency:
    # a 4-cycle of edges is a pair of points with two common lines
    g = lg.graph
    points, lines = _point_line_sides(lg)
    pindex = {v: i for i, v in enumerate(points)}
    lindex = {v: i for i, v in enumerate(lines)}
    adj = np.zeros((len(points), len(lines)), dtype=np.float64)
    for u, v in g.edges:
        pt, ln = (u, v) if lg.labels[u].kind in ("P", "SP") else (v, u)
        adj[pindex[pt], lindex[ln]] = 1.0
    common = adj @ adj.T
    np.fill_diagonal(common, 0.0)
    candidates = int(np.count_nonzero(common >= 2.0) // 2)
    closed = int(np.sum(common * (common - 1.0) / 2.0) // 2)
    return CaseCount("edges_only_alternating", candidates, closed)


def _one_vertex_three_across(lg, name: str, side: str) -> CaseCount:
    # a single point (line) joined by edges to two of three arc-chained
    # lines (points); the two edge endpoints must share a part
    g = lg.graph
    part_of = lg.partition.part_of
    my_kinds = ("P", "SP") if side == "point" else ("L", "VL")
    candidates = 0
    closed = 0
    for v in range(g.n):
        if lg.labels[v].kind not in my_kinds:
            continue
        by_part: dict[tuple, list[int]] = {}
        for w in g.edge_nbrs[v]:
            by_part.setdefault(part_of[w], []).append(w)
        for group in by_part.values():
            for i in range(len(group)):
                for j in range(len(group)):
                    if i == j:
                        continue
                    a, c = group[i], group[j]
                    candidates += 1
                    # middles m with arcs a -> m -> c, m distinct from v
                    for m in g.arc_out[a]:
                        if m != c and m != v and g.has_arc(m, c):
                            closed += 1
    return CaseCount(name, candidates, closed)


def _arc_pair_cases(lg) -> list[CaseCount]:
    # two arc-adjacent points plus two arc-adjacent lines joined by two
    # cross edges; split by which circulant family each pair lives in
    g = lg.graph
    part_of = lg.partition.part_of
    partner: list[dict[tuple, int]] = [dict() for _ in range(g.n)]
    for u, v in g.edges:
        partner[u][part_of[v]] = v
        partner[v][part_of[u]] = u
    line_parts = sorted(key for key in lg.partition.parts if key[0] in ("L", "VL"))
    names = {
        ("P", "L"): "affine_point_pair_affine_line_pair",
        ("P", "VL"): "affine_point_pair_vertical_line_pair",
        ("SP", "L"): "slope_point_pair_affine_line_pair",
        ("SP", "VL"): "slope_point_pair_vertical_line_pair",
    }
    tallies = {key: [0, 0] for key in names}
    for p1, p2 in g.arcs:
        pkind = part_of[p1][0]
        if pkind not in ("P", "SP"):
            continue
        for lpart in line_parts:
            l1 = partner[p1].get(lpart)
            l2 = partner[p2].get(lpart)
            if l1 is None or l2 is None:
                continue
            tally = tallies[(pkind, lpart[0])]
            tally[0] += 1
            # cycle p1 -arc-> p2 -edge- l2 -arc-> l1 -edge- p1
            if g.has_arc(l2, l1):
                tally[1] += 1
    return [CaseCount(names[key], cand, close)
            for key, (cand, close) in sorted(tallies.items(), key=lambda t: names[t[0]])]


def count_mixed_4cycles_casewise(lg) -> list[CaseCount]:
    """Census of every shape a mixed 4-cycle could take in the
    augmented semiplane, by the alternation pattern of points and
    lines.  Purely-directed 4-cycles cannot leave a part and are ruled
    out by the part circulants; every other pattern is counted here.
    Returns per-case candidate and closure counts (closures all zero
    for a sound construction)."""
    if lg.partition is None:
        raise MissingPartitionError("4-cycle census needs the part partition")
    out = [_edges_only_alternating(lg)]
    out.append(_one_vertex_three_across(lg, "point_with_three_lines", "point"))
    out.append(_one_vertex_three_across(lg, "line_with_three_points", "line"))
    out.extend(_arc_pair_cases(lg))
    return out


def find_exemplar_5cycle(lg, field) -> CycleWitness:
    """Instantiate the explicit 5-cycle template
    ((x,y), [m,b], (x/xi, y'), (x, y'), L_x) with y = m*x + b and
    y' = m*(x/xi) + b, scanning x, m over units in exponent order and b
    over element encodings.  Each step is validated against the graph;
    the first valid instantiation is returned."""
    g = lg.graph
    inv_xi = field.inv(field.xi)
    for x in field.units():
        x2 = field.mul(x, inv_xi)
        for m in field.units():
            for b in field.elements():
                y = field.add(field.mul(m, x), b)
                y2 = field.add(field.mul(m, x2), b)
                verts = (
                    lg.index_of("P", x, y),
                    lg.index_of("L", m, b),
                    lg.index_of("P", x2, y2),
                    lg.index_of("P", x, y2),
                    lg.index_of("VL", x),
                )
                kinds = ("E", "E", "A", "E", "E")
                try:
                    w = CycleWitness(verts, kinds)
                    validate_witness(g, w)
                except ValueError:
                    continue
                return w
    raise TemplateInvalidError("no instantiation of the 5-cycle template closes")
