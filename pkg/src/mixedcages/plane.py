"""Incidence graphs over GF(q): the projective plane and the type-L
elliptic semiplane obtained from it.

Vertex labels
-------------
``P x y``  affine point (x, y)
``L m b``  affine line y = m*x + b, written [m, b]
``VL i``   vertical line x = i
``SP i``   slope point (common point of the lines with slope i)
``IL``     the line at infinity   (projective plane only)
``IP``     the point at infinity  (projective plane only)

The semiplane keeps only labels whose first coordinate is nonzero; its
vertices are grouped into 2(q+1) parts of q-1 vertices: the points of
each height y, the lines of each intercept b, the vertical lines, and
the slope points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KindMismatchError, OutOfRangeError
from .gf import FieldTable
from .mixed import MixedGraph

__all__ = [
    "VertexLabel",
    "PartitionMap",
    "LabeledGraph",
    "incident",
    "build_pg2",
    "build_semiplane",
]

POINT_KINDS = ("P", "SP", "IP")
LINE_KINDS = ("L", "VL", "IL")


@dataclass(frozen=True)
class VertexLabel:
    """Structured identity of a vertex: a kind tag plus field-element
    coordinates (canonical integer encodings)."""
    kind: str
    coords: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.coords:
            return f"{self.kind} " + " ".join(str(c) for c in self.coords)
        return self.kind


class PartitionMap:
    """Vertex -> part assignment for the semiplane circulant parts.

    Part keys are ("P", y) and ("L", b) for y, b in F_q, plus ("VL",)
    for the vertical lines and ("SP",) for the slope points.
    """

    def __init__(self, part_of: list[tuple]):
        self.part_of = part_of
        self.parts: dict[tuple, list[int]] = {}
        for v, key in enumerate(part_of):
            self.parts.setdefault(key, []).append(v)

    def __len__(self) -> int:
        return len(self.parts)


class LabeledGraph:
    """A mixed graph together with vertex labels and (optionally) the
    part partition."""

    def __init__(self, graph: MixedGraph, labels: list[VertexLabel],
                 partition: PartitionMap | None = None):
        if len(labels) != graph.n:
            raise ValueError("one label per vertex required")
        self.graph = graph
        self.labels = labels
        self.partition = partition
        self._index = {label: i for i, label in enumerate(labels)}
        if len(self._index) != graph.n:
            raise ValueError("labels must be distinct")

    def index_of(self, kind: str, *coords: int) -> int:
        return self._index[VertexLabel(kind, tuple(coords))]

    def label(self, v: int) -> VertexLabel:
        return self.labels[v]


def incident(field: FieldTable, line: VertexLabel, point: VertexLabel) -> bool:
    """Projective-plane incidence between a line-kind and a point-kind
    label.  Raises KindMismatchError on wrong kinds."""
    if line.kind not in LINE_KINDS:
        raise KindMismatchError(f"{line} is not a line kind")
    if point.kind not in POINT_KINDS:
        raise KindMismatchError(f"{point} is not a point kind")
    if line.kind == "L":
        m, b = line.coords
        if point.kind == "P":
            x, y = point.coords
            return y == field.add(field.mul(m, x), b)
        if point.kind == "SP":
            return point.coords[0] == m
        return False  # IP lies only on vertical lines and IL
    if line.kind == "VL":
        i = line.coords[0]
        if point.kind == "P":
            return point.coords[0] == i
        return point.kind == "IP"
    # line at infinity
    return point.kind in ("SP", "IP")


def _affine_orders(field: FieldTable) -> tuple[int, ...]:
    # 0 first, then nonzero elements in exponent order; dropping 0 leaves
    # the exponent order used by the semiplane, so restricting the
    # projective plane to the semiplane's vertex sets preserves indexing.
    return (0,) + field.units()


def build_pg2(field: FieldTable) -> LabeledGraph:
    """Incidence graph of PG(2, q): order 2q^2 + 2q + 2, (q+1)-regular,
    bipartite with girth 6 and diameter 3."""
    q = field.q
    xs = _affine_orders(field)
    labels: list[VertexLabel] = []
    for y in field.elements():
        for x in xs:
            labels.append(VertexLabel("P", (x, y)))
    for b in field.elements():
        for m in xs:
            labels.append(VertexLabel("L", (m, b)))
    for i in xs:
        labels.append(VertexLabel("VL", (i,)))
    for i in xs:
        labels.append(VertexLabel("SP", (i,)))
    labels.append(VertexLabel("IL"))
    labels.append(VertexLabel("IP"))

    g = MixedGraph(len(labels))
    lg = LabeledGraph(g, labels)
    il = lg.index_of("IL")
    ip = lg.index_of("IP")
    for b in field.elements():
        for m in xs:
            u = lg.index_of("L", m, b)
            for x in field.elements():
                g.add_edge(u, lg.index_of("P", x, field.add(field.mul(m, x), b)))
            g.add_edge(u, lg.index_of("SP", m))
    for i in xs:
        u = lg.index_of("VL", i)
        for y in field.elements():
            g.add_edge(u, lg.index_of("P", i, y))
        g.add_edge(u, ip)
        g.add_edge(il, lg.index_of("SP", i))
    g.add_edge(il, ip)
    return lg


def build_semiplane(field: FieldTable) -> LabeledGraph:
    """Type-L elliptic semiplane graph: delete the vertical line x = 0
    with its points and the slope point 0 with its lines from PG(2, q).

    Order 2(q-1)(q+1), q-regular, girth 6.  Vertices are indexed block
    by block: affine points (outer key y in encoding order, inner key
    x = xi^j by exponent), affine lines (outer b, inner m = xi^j), then
    vertical lines and slope points by exponent.
    """
    q = field.q
    if q < 3:
        raise OutOfRangeError("semiplane needs q >= 3 (parts of size q-1 >= 2)")
    units = field.units()
    labels: list[VertexLabel] = []
    part_of: list[tuple] = []
    for y in field.elements():
        for x in units:
            labels.append(VertexLabel("P", (x, y)))
            part_of.append(("P", y))
    for b in field.elements():
        for m in units:
            labels.append(VertexLabel("L", (m, b)))
            part_of.append(("L", b))
    for i in units:
        labels.append(VertexLabel("VL", (i,)))
        part_of.append(("VL",))
    for i in units:
        labels.append(VertexLabel("SP", (i,)))
        part_of.append(("SP",))

    g = MixedGraph(len(labels))
    lg = LabeledGraph(g, labels, PartitionMap(part_of))
    for b in field.elements():
        for m in units:
            u = lg.index_of("L", m, b)
            for x in units:
                g.add_edge(u, lg.index_of("P", x, field.add(field.mul(m, x), b)))
            g.add_edge(u, lg.index_of("SP", m))
    for i in units:
        u = lg.index_of("VL", i)
        for y in field.elements():
            g.add_edge(u, lg.index_of("P", i, y))
    return lg
