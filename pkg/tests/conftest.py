"""Shared corpus builders and hypothesis strategies."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from cliquetrace import Graph, from_edges, gnp, random_ktree

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def gnp_corpus(ns, ps, seeds) -> list[Graph]:
    """Deterministic seeded random-graph corpus."""
    return [gnp(n, p, seed) for n in ns for p in ps for seed in seeds]


def ktree_corpus(cases) -> list[Graph]:
    """Deterministic chordal corpus; cases are (n, k, seed) triples."""
    return [random_ktree(n, k, seed) for n, k, seed in cases]


@st.composite
def graphs(draw, max_n: int = 10):
    """Arbitrary small graphs with good shrinking behavior."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    else:
        edges = []
    return from_edges(n, edges)


@pytest.fixture(scope="session")
def small_random_graphs() -> list[Graph]:
    """216 seeded graphs with n in [4, 12] across three densities."""
    return gnp_corpus(range(4, 13), (0.2, 0.5, 0.8), range(8))
