"""Certification of the claimed properties of the constructed graphs:
orders, simplicity, total regularity, the part matchings, the part
circulants, mixed girth exactly 5, and the order bounds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import HasArcsError, MissingPartitionError, OutOfRangeError
from .gf import make_field
from .girth import count_mixed_4cycles_casewise, mixed_girth, validate_witness
from .mixed import MixedGraph, build_hq, degree_profile
from .plane import LabeledGraph

__all__ = [
    "Check",
    "VerificationReport",
    "BoundPair",
    "bounds",
    "check_total_regularity",
    "check_part_matchings",
    "check_simplicity",
    "check_part_circulants",
    "verify_hq",
    "diameter_undirected",
]


@dataclass(frozen=True)
class Check:
    """Outcome of one named property check.  counterexample is empty
    for passing checks and carries the offending object otherwise."""
    name: str
    claim: str
    observed: str
    passed: bool
    counterexample: str = ""


class VerificationReport:
    def __init__(self, checks: list[Check]):
        self.checks = checks

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"CHECK {c.name} {status} {c.observed}"
            if c.counterexample:
                line += f" [{c.counterexample}]"
            out.append(line)
        out.append(f"OVERALL {'PASS' if self.overall else 'FAIL'}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class BoundPair:
    lower: int
    upper: int


def bounds(q: int, z: int) -> BoundPair:
    """Order window for a total z-regular, q-edge-regular mixed graph
    of girth 5: q^2 + q + 4z + 1 below, 2q^2 - 2 above."""
    if q < 7:
        raise OutOfRangeError(f"q={q}: bounds stated for q >= 7")
    return BoundPair(lower=q * q + q + 4 * z + 1, upper=2 * q * q - 2)


def check_total_regularity(g: MixedGraph, z: int, r: int) -> Check:
    """Every vertex must have z in-arcs, z out-arcs, and r edges."""
    prof = degree_profile(g)
    want = (z, z, r)
    for v in range(g.n):
        got = prof.at(v)
        if got != want:
            return Check("total_regularity", f"profile {want} everywhere",
                         f"vertex {v} has {got}", False,
                         f"vertex {v}")
    return Check("total_regularity", f"profile {want} everywhere",
                 f"all {g.n} vertices at {want}", True)


def check_simplicity(g: MixedGraph) -> Check:
    """Re-audit simplicity from the stored link sets."""
    for u, v in g.edges:
        if u == v:
            return Check("simplicity", "no loops, no parallel links",
                         f"loop edge at {u}", False, f"edge ({u},{v})")
    for u, v in g.arcs:
        if u == v:
            return Check("simplicity", "no loops, no parallel links",
                         f"loop arc at {u}", False, f"arc ({u},{v})")
        key = (u, v) if u < v else (v, u)
        if key in g.edges:
            return Check("simplicity", "no loops, no parallel links",
                         f"arc ({u},{v}) parallel to edge {key}", False,
                         f"arc ({u},{v})")
    return Check("simplicity", "no loops, no parallel links",
                 f"{len(g.edges)} edges / {len(g.arcs)} arcs clean", True)


def _matching_expectations(ppart: tuple, lpart: tuple) -> bool:
    """True when the part pair should carry a perfect matching; the
    pairs (points of height y, lines of intercept y) and (slope points,
    vertical lines) carry no edges at all."""
    if ppart[0] == "P" and lpart[0] == "L":
        return ppart[1] != lpart[1]
    if ppart[0] == "SP" and lpart[0] == "VL":
        return False
    return True


def check_part_matchings(lg: LabeledGraph) -> Check:
    """Between every point part and line part the edges must form a
    perfect matching, except on the diagonal pairs, which are empty."""
    if lg.partition is None:
        raise MissingPartitionError("matching check needs the part partition")
    g = lg.graph
    part_of = lg.partition.part_of
    between: dict[tuple, dict[int, int]] = {}
    for u, v in g.edges:
        pu, pv = part_of[u], part_of[v]
        u_is_point = pu[0] in ("P", "SP")
        v_is_point = pv[0] in ("P", "SP")
        if u_is_point == v_is_point:
            return Check("part_matchings",
                         "perfect matchings off the diagonal pairs",
                         f"edge {u}-{v} does not cross the point/line sides",
                         False, f"edge ({u},{v})")
        key, a, b = ((pu, pv), u, v) if u_is_point else ((pv, pu), v, u)
        deg = between.setdefault(key, {})
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    point_parts = sorted(k for k in lg.partition.parts if k[0] in ("P", "SP"))
    line_parts = sorted(k for k in lg.partition.parts if k[0] in ("L", "VL"))
    matched = 0
    empty = 0
    for pp in point_parts:
        for lp in line_parts:
            deg = between.get((pp, lp), {})
            expect_matching = _matching_expectations(pp, lp)
            if not expect_matching:
                if deg:
                    return Check("part_matchings",
                                 "perfect matchings off the diagonal pairs",
                                 f"{sum(deg.values()) // 2} edges on a "
                                 "diagonal pair", False, f"pair ({pp},{lp})")
                empty += 1
                continue
            for v in lg.partition.parts[pp] + lg.partition.parts[lp]:
                if deg.get(v, 0) != 1:
                    return Check("part_matchings",
                                 "perfect matchings off the diagonal pairs",
                                 f"vertex {v} has {deg.get(v, 0)} edges "
                                 "into the opposite part", False,
                                 f"pair ({pp},{lp}), vertex {v}")
            matched += 1
    return Check("part_matchings", "perfect matchings off the diagonal pairs",
                 f"{matched} perfect matchings, {empty} empty pairs", True)


def check_part_circulants(lg: LabeledGraph, field, params) -> Check:
    """Inside every part the arcs must realize the circulant on Z_(q-1)
    with jumps 1..k under the exponent coordinate: forward jumps on the
    point-height and vertical-line parts, backward on the line-intercept
    and slope-point parts.  Also rejects any arc that crosses parts."""
    if lg.partition is None:
        raise MissingPartitionError("circulant check needs the part partition")
    g = lg.graph
    part_of = lg.partition.part_of
    claim = f"per-part circulant with jumps 1..{params.k}"
    for u, v in g.arcs:
        if part_of[u] != part_of[v]:
            return Check("part_circulants", claim,
                         f"arc ({u},{v}) crosses parts", False,
                         f"{part_of[u]} -> {part_of[v]}")
    m = field.q - 1
    jumps = set(range(1, params.k + 1))
    for key, members in sorted(lg.partition.parts.items()):
        forward = key[0] in ("P", "VL")
        seen = set()
        for u in members:
            ju = field.log[lg.labels[u].coords[0]]
            for v in g.arc_out[u]:
                jv = field.log[lg.labels[v].coords[0]]
                d = (jv - ju) % m if forward else (ju - jv) % m
                if d not in jumps:
                    return Check("part_circulants", claim,
                                 f"arc with exponent step {d} in part {key}",
                                 False, f"arc ({u},{v})")
                seen.add((ju, d))
        if len(seen) != m * len(jumps):
            return Check("part_circulants", claim,
                         f"part {key} has {len(seen)} of {m * len(jumps)} arcs",
                         False, f"part {key}")
    return Check("part_circulants", claim,
                 f"{len(lg.partition.parts)} parts isomorphic", True)


def verify_hq(q: int, backend: str | None = None) -> VerificationReport:
    """Build the girth-5 graph for field order q and certify the whole
    pipeline: order, simplicity, total regularity, part circulants,
    part matchings, mixed girth exactly 5 with a validated witness,
    the 4-cycle census, and the order bounds."""
    if q < 7:
        raise OutOfRangeError(f"q={q}: construction starts at q = 7")
    field = make_field(q)
    lg, params = build_hq(field)
    g = lg.graph
    checks = []

    want_n = 2 * q * q - 2
    checks.append(Check("order", f"{want_n} vertices", str(g.n), g.n == want_n))
    checks.append(check_simplicity(g))
    checks.append(check_total_regularity(g, params.k, q))
    checks.append(check_part_circulants(lg, field, params))
    checks.append(check_part_matchings(lg))

    report = mixed_girth(g, cutoff=6, backend=backend)
    if report.girth == 5:
        try:
            validate_witness(g, report.witness)
            obs = "girth 5, witness valid"
            ok = True
        except ValueError as exc:
            obs, ok = f"girth 5, witness invalid: {exc}", False
        checks.append(Check("mixed_girth", "mixed girth exactly 5", obs, ok))
    else:
        got = ">6" if report.girth is None else str(report.girth)
        checks.append(Check("mixed_girth", "mixed girth exactly 5",
                            f"girth {got}", False))

    cases = count_mixed_4cycles_casewise(lg)
    bad = [c for c in cases if c.closed != 0]
    checks.append(Check(
        "four_cycle_census", "no mixed 4-cycle in any case shape",
        "; ".join(f"{c.name}={c.closed}" for c in cases),
        not bad, bad[0].name if bad else ""))

    bp = bounds(q, params.k)
    checks.append(Check(
        "bounds", "lower <= order = upper",
        f"{bp.lower} <= {g.n} = {bp.upper}",
        bp.lower <= bp.upper and g.n == bp.upper))
    return VerificationReport(checks)


def diameter_undirected(g: MixedGraph) -> int | None:
    """Max BFS eccentricity of an edge-only graph; None if disconnected.
    Raises HasArcsError when arcs are present."""
    if g.arcs:
        raise HasArcsError("diameter is defined here for edge-only graphs")
    if g.n == 0:
        return None
    diam = 0
    dist = [-1] * g.n
    for src in range(g.n):
        for i in range(g.n):
            dist[i] = -1
        dist[src] = 0
        dq = deque([src])
        far = 0
        seen = 1
        while dq:
            u = dq.popleft()
            for w in g.edge_nbrs[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    far = max(far, dist[w])
                    seen += 1
                    dq.append(w)
        if seen < g.n:
            return None
        diam = max(diam, far)
    return diam
