"""Shared fixtures and corpus builders for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from mixedcages import MixedGraph, build_circulant_digraph, mixed_girth
from mixedcages.errors import SimplicityViolationError


@pytest.fixture(scope="session")
def warm_kernel():
    """Trigger JIT compilation once so timed tests measure the search,
    not the compiler."""
    g = MixedGraph(3)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(2, 0)
    mixed_girth(g)
    return True


def random_mixed_graph(rng: np.random.Generator, n: int) -> MixedGraph:
    """Random simple mixed graph: per vertex pair, independently pick
    nothing / edge / one arc / a digon."""
    g = MixedGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            r = rng.random()
            if r < 0.15:
                g.add_edge(u, v)
            elif r < 0.25:
                g.add_arc(u, v)
            elif r < 0.35:
                g.add_arc(v, u)
            elif r < 0.40:
                g.add_arc(u, v)
                g.add_arc(v, u)
    return g


def small_graph_corpus() -> list[MixedGraph]:
    """Deterministic corpus of >= 200 mixed graphs with n <= 12:
    seeded random graphs plus circulants, digons, triangles, and paths."""
    corpus: list[MixedGraph] = []
    rng = np.random.default_rng(20240521)
    for i in range(180):
        corpus.append(random_mixed_graph(rng, 2 + i % 11))

    for n in range(4, 13):
        for z in (1, 2, 3):
            try:
                corpus.append(build_circulant_digraph(n, range(1, z + 1)))
            except SimplicityViolationError:
                pass

    digon = MixedGraph(2)
    digon.add_arc(0, 1)
    digon.add_arc(1, 0)
    corpus.append(digon)

    tri = MixedGraph(3)
    for u, v in ((0, 1), (1, 2), (0, 2)):
        tri.add_edge(u, v)
    corpus.append(tri)

    dtri = MixedGraph(3)
    for u, v in ((0, 1), (1, 2), (2, 0)):
        dtri.add_arc(u, v)
    corpus.append(dtri)

    for n in (2, 5, 9):
        path = MixedGraph(n)
        for u in range(n - 1):
            path.add_edge(u, u + 1)
        corpus.append(path)

    mixed5 = MixedGraph(5)
    for u, v in ((0, 1), (1, 2), (3, 4)):
        mixed5.add_edge(u, v)
    mixed5.add_arc(2, 3)
    mixed5.add_arc(4, 0)
    corpus.append(mixed5)
    return corpus
