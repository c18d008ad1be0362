"""Command-line surface and the MIXED text format.

MIXED format
------------
Line 1:   ``MIXED <n> <edges> <arcs>``
Optional: one ``V <index> <kind> <coords...>`` line per vertex, in
          index order (kinds P, L, VL, SP, IL, IP; coordinates are
          canonical field-element encodings).
Then:     ``E u v`` lines with u < v, ascending; ``A u v`` lines,
          ascending.  Every line newline-terminated, fields single-space
          separated.  Rendering is byte-deterministic and parse is its
          exact inverse.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    IndexOutOfBoundsError,
    MixedCagesError,
    OutOfRangeError,
    ParseError,
)
from .gf import is_prime_power, make_field
from .girth import mixed_girth
from .mixed import MixedGraph, build_circulant_digraph, build_hq, jump_count
from .plane import LabeledGraph, VertexLabel, build_pg2, build_semiplane

__all__ = ["render_mixed", "parse_mixed", "run", "main"]

_LABEL_ARITY = {"P": 2, "L": 2, "VL": 1, "SP": 1, "IL": 0, "IP": 0}


def render_mixed(g) -> str:
    """Serialize a MixedGraph or LabeledGraph to the MIXED format."""
    labels = None
    if isinstance(g, LabeledGraph):
        labels = g.labels
        g = g.graph
    out = [f"MIXED {g.n} {len(g.edges)} {len(g.arcs)}"]
    if labels is not None:
        for i, label in enumerate(labels):
            out.append(f"V {i} {label}")
    for u, v in sorted(g.edges):
        out.append(f"E {u} {v}")
    for u, v in sorted(g.arcs):
        out.append(f"A {u} {v}")
    return "\n".join(out) + "\n"


def _parse_index(token: str, n: int, lineno: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"expected a vertex index, got {token!r}", lineno)
    if not 0 <= v < n:
        raise IndexOutOfBoundsError(f"vertex {v} outside 0..{n - 1}", lineno)
    return v


def parse_mixed(doc: str):
    """Parse a MIXED document.  Returns a LabeledGraph when label lines
    are present, else a bare MixedGraph.  Validates syntax, index
    bounds, simplicity, and the header counts."""
    lines = doc.splitlines()
    if not lines:
        raise ParseError("empty document", 1)
    head = lines[0].split(" ")
    if len(head) != 4 or head[0] != "MIXED":
        raise ParseError("header must be 'MIXED <n> <edges> <arcs>'", 1)
    try:
        n, ne, na = (int(t) for t in head[1:])
    except ValueError:
        raise ParseError("non-integer header field", 1)
    if n < 0 or ne < 0 or na < 0:
        raise ParseError("negative header field", 1)
    g = MixedGraph(n)
    labels: list[VertexLabel] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        tag = parts[0]
        if tag == "V":
            if len(parts) < 3 or parts[2] not in _LABEL_ARITY:
                raise ParseError("label line must be 'V <index> <kind> ...'",
                                 lineno)
            idx = _parse_index(parts[1], n, lineno)
            if idx != len(labels):
                raise ParseError(
                    f"label for vertex {idx} out of order", lineno)
            kind = parts[2]
            coords = parts[3:]
            if len(coords) != _LABEL_ARITY[kind]:
                raise ParseError(
                    f"kind {kind} takes {_LABEL_ARITY[kind]} coordinates",
                    lineno)
            try:
                labels.append(VertexLabel(kind, tuple(int(c) for c in coords)))
            except ValueError:
                raise ParseError("non-integer coordinate", lineno)
        elif tag in ("E", "A"):
            if len(parts) != 3:
                raise ParseError(f"{tag} line needs exactly two indices",
                                 lineno)
            u = _parse_index(parts[1], n, lineno)
            v = _parse_index(parts[2], n, lineno)
            if tag == "E":
                g.add_edge(u, v)
            else:
                g.add_arc(u, v)
        else:
            raise ParseError(f"unknown line tag {tag!r}", lineno)
    if len(g.edges) != ne or len(g.arcs) != na:
        raise ParseError(
            f"header promises {ne} edges / {na} arcs, found "
            f"{len(g.edges)} / {len(g.arcs)}", 1)
    if labels:
        if len(labels) != n:
            raise ParseError(f"{len(labels)} labels for {n} vertices", 1)
        return LabeledGraph(g, labels)
    return g


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------

def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_field(args) -> int:
    field = make_field(args.q)
    print(f"GF {field.q} p {field.p} n {field.n}")
    print("modulus " + " ".join(str(c) for c in field.modulus))
    print(f"xi {field.xi}")
    for j, e in enumerate(field.exp):
        print(f"{j}\t{e}")
    return 0


def _cmd_build(args) -> int:
    if args.target == "circulant":
        if args.k < 1:
            raise OutOfRangeError("circulant needs at least one jump")
        g = build_circulant_digraph(args.n, range(1, args.k + 1))
        _emit(render_mixed(g), args.out)
        return 0
    field = make_field(args.q)
    if args.target == "pg2":
        lg = build_pg2(field)
    elif args.target == "semiplane":
        lg = build_semiplane(field)
    else:
        lg, _ = build_hq(field)
    _emit(render_mixed(lg), args.out)
    return 0


def _cmd_girth(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        parsed = parse_mixed(fh.read())
    g = parsed.graph if isinstance(parsed, LabeledGraph) else parsed
    report = mixed_girth(g, cutoff=args.cutoff, backend=args.backend)
    if report.girth is None:
        print("girth infinite" if args.cutoff is None
              else f"girth > {args.cutoff}")
    else:
        print(f"girth {report.girth}")
        if args.witness:
            print("witness " + " ".join(str(v) for v in report.witness.vertices))
            print("kinds " + " ".join(report.witness.kinds))
    return 0


def _cmd_verify(args) -> int:
    from .verify import verify_hq

    report = verify_hq(args.q, backend=args.backend)
    sys.stdout.write(report.text())
    return 0 if report.overall else 1


def _cmd_table(args) -> int:
    from .verify import bounds

    rows = []
    for q in range(args.qmin, args.qmax + 1):
        if not is_prime_power(q) or q < 7:
            continue
        field = make_field(q)
        k, r = jump_count(q)
        lg, params = build_hq(field)
        rep = mixed_girth(lg.graph, cutoff=6)
        girth = str(rep.girth) if rep.girth is not None else ">6"
        bp = bounds(q, k)
        rows.append((q, k, r, lg.graph.n, girth, bp.lower, bp.upper))
    header = ("q", "k", "R", "order", "girth", "lower", "upper")
    if args.format == "tsv":
        print("\t".join(header))
        for row in rows:
            print("\t".join(str(c) for c in row))
    else:
        print("| " + " | ".join(header) + " |")
        print("|" + "|".join(" --- " for _ in header) + "|")
        for row in rows:
            print("| " + " | ".join(str(c) for c in row) + " |")
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mixedcages",
        description="Build mixed graphs of girth 5 from elliptic semiplanes "
                    "and certify their properties.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="print the canonical GF(q) tables")
    sp.add_argument("q", type=int)
    sp.set_defaults(func=_cmd_field)

    sp = sub.add_parser("build", help="construct a graph and emit MIXED text")
    bsub = sp.add_subparsers(dest="target", required=True)
    for target in ("pg2", "semiplane", "hq"):
        tp = bsub.add_parser(target)
        tp.add_argument("q", type=int)
        tp.add_argument("--out", default=None)
        tp.set_defaults(func=_cmd_build, target=target)
    tp = bsub.add_parser("circulant")
    tp.add_argument("n", type=int)
    tp.add_argument("k", type=int)
    tp.add_argument("--out", default=None)
    tp.set_defaults(func=_cmd_build, target="circulant")

    sp = sub.add_parser("girth", help="mixed girth of a MIXED file")
    sp.add_argument("file")
    sp.add_argument("--cutoff", type=int, default=None)
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--backend", choices=("auto", "numba", "python"),
                    default=None)
    sp.set_defaults(func=_cmd_girth)

    sp = sub.add_parser("verify", help="certify a constructed graph")
    vsub = sp.add_subparsers(dest="target", required=True)
    vp = vsub.add_parser("hq")
    vp.add_argument("q", type=int)
    vp.add_argument("--backend", choices=("auto", "numba", "python"),
                    default=None)
    vp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("table", help="parameter/bound table per prime power")
    sp.add_argument("qmin", type=int)
    sp.add_argument("qmax", type=int)
    sp.add_argument("--format", choices=("tsv", "md"), default="tsv")
    sp.set_defaults(func=_cmd_table)
    return p


def run(argv=None) -> int:
    """Dispatch a command line.  Exit codes: 0 success / all checks
    pass, 1 verification failure, 2 usage error, 3 invalid input."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (FileNotFoundError, MixedCagesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main(argv=None) -> int:
    return run(argv)
