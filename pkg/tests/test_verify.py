import numpy as np
import pytest

from mixedcages import (
    MixedGraph,
    bounds,
    build_hq,
    build_pg2,
    check_part_circulants,
    check_part_matchings,
    check_simplicity,
    check_total_regularity,
    diameter_undirected,
    jump_count,
    make_field,
    mixed_girth,
    verify_hq,
)
from mixedcages.errors import HasArcsError, NotAPrimePowerError, OutOfRangeError
from mixedcages.plane import LabeledGraph


def rebuild_without(lg, drop_edge=None, drop_arc=None):
    g = MixedGraph(lg.graph.n)
    for e in lg.graph.edges:
        if e != drop_edge:
            g.add_edge(*e)
    for a in lg.graph.arcs:
        if a != drop_arc:
            g.add_arc(*a)
    return LabeledGraph(g, lg.labels, lg.partition)


def test_total_regularity_examples():
    lg7, p7 = build_hq(make_field(7))
    assert check_total_regularity(lg7.graph, p7.k, 7).passed

    lg11, p11 = build_hq(make_field(11))
    assert p11.k == 2
    assert check_total_regularity(lg11.graph, 2, 11).passed

    dtri = MixedGraph(3)
    for u, v in ((0, 1), (1, 2), (2, 0)):
        dtri.add_arc(u, v)
    assert check_total_regularity(dtri, 1, 0).passed
    failing = check_total_regularity(dtri, 1, 1)
    assert not failing.passed
    assert "vertex 0" in failing.counterexample


def test_bounds_examples():
    assert bounds(7, 1) == bounds(7, jump_count(7)[0])
    assert (bounds(7, 1).lower, bounds(7, 1).upper) == (61, 96)
    assert (bounds(8, 1).lower, bounds(8, 1).upper) == (77, 126)
    assert (bounds(11, 2).lower, bounds(11, 2).upper) == (141, 240)
    with pytest.raises(OutOfRangeError):
        bounds(5, 1)
    for q in (7, 8, 9, 16, 27, 32):
        bp = bounds(q, jump_count(q)[0])
        assert bp.lower <= bp.upper


def test_part_matchings_pass_and_mutant():
    lg, _ = build_hq(make_field(7))
    ok = check_part_matchings(lg)
    assert ok.passed
    assert "56 perfect matchings, 8 empty pairs" in ok.observed

    victim = sorted(lg.graph.edges)[0]
    mutant = rebuild_without(lg, drop_edge=victim)
    failed = check_part_matchings(mutant)
    assert not failed.passed
    assert "pair" in failed.counterexample


def test_part_circulants_pass_and_mutant():
    field = make_field(8)
    lg, params = build_hq(field)
    assert check_part_circulants(lg, field, params).passed

    victim = sorted(lg.graph.arcs)[0]
    mutant = rebuild_without(lg, drop_arc=victim)
    failed = check_part_circulants(mutant, field, params)
    assert not failed.passed


def test_simplicity_audit_catches_raw_tampering():
    lg, _ = build_hq(make_field(7))
    assert check_simplicity(lg.graph).passed
    tampered = lg.graph.copy()
    u, v = sorted(tampered.arcs)[0]
    tampered.edges.add((min(u, v), max(u, v)))  # bypass insertion guards
    assert not check_simplicity(tampered).passed


@pytest.mark.parametrize("q", [7, 16])
def test_verify_hq_passes(q):
    report = verify_hq(q)
    assert report.overall
    names = [c.name for c in report.checks]
    assert names == ["order", "simplicity", "total_regularity",
                     "part_circulants", "part_matchings", "mixed_girth",
                     "four_cycle_census", "bounds"]


def test_verify_hq_rejects_bad_q():
    with pytest.raises(OutOfRangeError):
        verify_hq(6)
    with pytest.raises(NotAPrimePowerError):
        verify_hq(12)


def test_mutation_sensitivity():
    rng = np.random.default_rng(99)
    lg, params = build_hq(make_field(7))
    arcs = sorted(lg.graph.arcs)
    edges_present = lg.graph.edges
    part_members = list(lg.partition.parts.values())

    for _ in range(10):  # drop one arc: regularity must notice
        victim = arcs[rng.integers(len(arcs))]
        mutant = rebuild_without(lg, drop_arc=victim)
        assert not check_total_regularity(mutant.graph, params.k, 7).passed

    added = 0
    trials = 0
    while added < 10 and trials < 200:  # add a chord inside a part
        trials += 1
        members = part_members[rng.integers(len(part_members))]
        u, v = rng.choice(members, size=2, replace=False)
        u, v = int(u), int(v)
        key = (min(u, v), max(u, v))
        if key in edges_present or lg.graph.has_arc(u, v) \
                or lg.graph.has_arc(v, u):
            continue  # insertion guard would already reject these
        mutant = lg.graph.copy()
        mutant.add_edge(u, v)
        girth = mixed_girth(mutant, cutoff=6).girth
        matchings = check_part_matchings(
            LabeledGraph(mutant, lg.labels, lg.partition))
        assert (girth is not None and girth < 5) or not matchings.passed
        added += 1
    assert added == 10


def test_diameter():
    assert diameter_undirected(build_pg2(make_field(7)).graph) == 3

    e = MixedGraph(2)
    e.add_edge(0, 1)
    assert diameter_undirected(e) == 1

    iso = MixedGraph(2)
    assert diameter_undirected(iso) is None

    digon = MixedGraph(2)
    digon.add_arc(0, 1)
    with pytest.raises(HasArcsError):
        diameter_undirected(digon)


def test_report_rendering():
    report = verify_hq(8)
    lines = report.lines()
    assert lines[-1] == "OVERALL PASS"
    assert all(line.startswith("CHECK ") for line in lines[:-1])
    assert any("girth 5" in line for line in lines)
