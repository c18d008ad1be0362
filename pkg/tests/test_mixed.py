import pytest

from mixedcages import (
    MixedGraph,
    build_circulant_digraph,
    build_hq,
    build_pg2,
    build_semiplane,
    degree_profile,
    induced_subgraph,
    jump_count,
    make_field,
)
from mixedcages.errors import OutOfRangeError, SimplicityViolationError


def test_simplicity_rules():
    g = MixedGraph(3)
    g.add_edge(0, 1)
    with pytest.raises(SimplicityViolationError):
        g.add_edge(1, 0)  # duplicate, either orientation
    with pytest.raises(SimplicityViolationError):
        g.add_arc(0, 1)  # parallel to the edge
    with pytest.raises(SimplicityViolationError):
        g.add_arc(1, 0)
    with pytest.raises(SimplicityViolationError):
        g.add_edge(2, 2)  # loop
    g.add_arc(1, 2)
    g.add_arc(2, 1)  # a digon is legal
    with pytest.raises(SimplicityViolationError):
        g.add_arc(1, 2)  # duplicate arc
    with pytest.raises(SimplicityViolationError):
        g.add_edge(1, 2)  # edge parallel to existing arcs
    assert g.num_edges == 1 and g.num_arcs == 2


def test_circulant_digraphs():
    c5 = build_circulant_digraph(5, [1])
    assert c5.arcs == {(i, (i + 1) % 5) for i in range(5)}
    c9 = build_circulant_digraph(9, [1, 2])
    prof = degree_profile(c9).constant()
    assert prof == (2, 2, 0)
    with pytest.raises(SimplicityViolationError):
        build_circulant_digraph(4, [2])  # 2 + 2 = 4 gives antiparallel arcs
    with pytest.raises(SimplicityViolationError):
        build_circulant_digraph(9, [2, 7])  # complementary jumps
    with pytest.raises(SimplicityViolationError):
        build_circulant_digraph(9, [1, 1])
    with pytest.raises(ValueError):
        build_circulant_digraph(9, [])
    with pytest.raises(ValueError):
        build_circulant_digraph(9, [9])


def test_degree_profile():
    dtri = MixedGraph(3)
    for u, v in ((0, 1), (1, 2), (2, 0)):
        dtri.add_arc(u, v)
    assert degree_profile(dtri).constant() == (1, 1, 0)

    e = MixedGraph(2)
    e.add_edge(0, 1)
    p = degree_profile(e)
    assert p.at(0) == p.at(1) == (0, 0, 1)


def test_induced_subgraph():
    tri = MixedGraph(3)
    tri.add_edge(0, 1)
    tri.add_edge(1, 2)
    tri.add_edge(0, 2)
    assert induced_subgraph(tri, range(3)) == tri
    sub = induced_subgraph(tri, [0, 2])
    assert sub.n == 2 and sub.edges == {(0, 1)} and not sub.arcs

    g = MixedGraph(4)
    g.add_arc(1, 3)
    g.add_edge(0, 3)
    sub = induced_subgraph(g, [1, 3])
    assert sub.arcs == {(0, 1)} and not sub.edges


@pytest.mark.parametrize("q,k,R", [
    (7, 1, 2), (8, 1, 3), (9, 1, 4), (11, 2, 2), (13, 2, 4),
    (16, 3, 3), (17, 3, 4), (19, 4, 2), (23, 5, 2), (25, 5, 4),
    (27, 6, 2), (29, 6, 4), (31, 7, 2), (32, 7, 3),
])
def test_jump_count(q, k, R):
    assert jump_count(q) == (k, R)
    assert q - 1 == 4 * k + R and 1 <= R <= 5 and k >= 1


@pytest.mark.parametrize("q", [0, 3, 5, 6])
def test_jump_count_out_of_range(q):
    with pytest.raises(OutOfRangeError):
        jump_count(q)


def test_hq_counts_and_profile():
    lg, params = build_hq(make_field(7))
    assert (params.q, params.k, params.R) == (7, 1, 2)
    assert lg.graph.n == 96
    assert lg.graph.num_edges == 336
    assert lg.graph.num_arcs == 96
    assert degree_profile(lg.graph).constant() == (1, 1, 7)

    lg9, params9 = build_hq(make_field(9))
    assert lg9.graph.n == 160
    assert degree_profile(lg9.graph).constant() == (1, 1, 9)


def test_hq_q8_arcs_from_the_four_families():
    field = make_field(8)
    lg, params = build_hq(field)
    xi = field.xi
    g = lg.graph
    # points cycle forward by xi within a height, lines divide by xi
    assert g.has_arc(lg.index_of("P", 1, 0), lg.index_of("P", xi, 0))
    assert g.has_arc(lg.index_of("L", xi, 1), lg.index_of("L", 1, 1))
    assert g.has_arc(lg.index_of("VL", 1), lg.index_of("VL", xi))
    assert g.has_arc(lg.index_of("SP", xi), lg.index_of("SP", 1))


def test_hq_edges_equal_semiplane_edges():
    field = make_field(8)
    lg, _ = build_hq(field)
    base = build_semiplane(field)
    assert lg.graph.edges == base.graph.edges
    assert base.graph.num_arcs == 0


def test_hq_arcs_stay_inside_parts():
    lg, _ = build_hq(make_field(9))
    part_of = lg.partition.part_of
    assert all(part_of[u] == part_of[v] for u, v in lg.graph.arcs)


def test_hq_directed_cycles_are_long():
    # the arc-only subgraph is a disjoint union of part circulants, so
    # its shortest directed cycle needs ceil((q-1)/k) >= 5 jumps
    from mixedcages import mixed_girth

    for q in (7, 8, 9, 16):
        lg, params = build_hq(make_field(q))
        arc_only = MixedGraph(lg.graph.n)
        for u, v in lg.graph.arcs:
            arc_only.add_arc(u, v)
        expected = -((q - 1) // -params.k)
        assert expected >= 5
        assert mixed_girth(arc_only).girth == expected


@pytest.mark.parametrize("q", [4, 7])
def test_pg2_restriction_is_the_semiplane(q):
    field = make_field(q)
    pg = build_pg2(field)
    semi = build_semiplane(field)
    keep = [v for v, lab in enumerate(pg.labels)
            if lab.kind in ("P", "L", "VL", "SP") and lab.coords[0] != 0]
    assert induced_subgraph(pg.graph, keep) == semi.graph
    kept_labels = [pg.labels[v] for v in sorted(keep)]
    assert kept_labels == semi.labels
