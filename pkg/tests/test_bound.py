"""Branch-and-bound maximum clique: size, canonical identity, statistics."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from cliquetrace import (
    bk_pivot,
    gnp,
    is_maximal_clique,
    max_clique_bb,
    moon_moser,
    named,
    oracle_maximum_clique,
)
from conftest import graphs


def test_c5_is_triangle_free():
    clique, _ = max_clique_bb(named("cycle", 5))
    assert len(clique) == 2


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_moon_moser_size_k(k):
    clique, _ = max_clique_bb(moon_moser(k))
    assert len(clique) == k


def test_moon_moser_k3_canonical_identity():
    clique, _ = max_clique_bb(moon_moser(3))
    assert clique == oracle_maximum_clique(moon_moser(3)) == (0, 3, 6)


def test_empty_graph():
    clique, stats = max_clique_bb(named("empty", 1))
    assert clique == (0,)
    clique, stats = max_clique_bb(named("empty", 4))
    assert clique == (0,)


@given(g=graphs(max_n=10))
def test_matches_oracle_size_and_identity(g):
    clique, _ = max_clique_bb(g)
    if g.n == 0:
        assert clique == ()
    else:
        assert clique == oracle_maximum_clique(g)


@given(g=graphs(max_n=10))
@settings(max_examples=40)
def test_result_is_maximal(g):
    clique, _ = max_clique_bb(g)
    if clique:
        assert is_maximal_clique(g, clique)


def test_matches_pivot_census_beyond_oracle_scale():
    for n, p, seed in [(40, 0.5, 3), (60, 0.2, 4), (60, 0.5, 5)]:
        g = gnp(n, p, seed)
        clique, _ = max_clique_bb(g)
        assert len(clique) == max(bk_pivot(g).census)


def test_bound_table_invariants():
    g = gnp(25, 0.5, 13)
    _, stats = max_clique_bb(g)
    c = stats.bound_table.c
    assert len(c) == g.n
    for i in range(g.n - 1):
        assert c[i + 1] <= c[i] <= c[i + 1] + 1
    assert c[-1] == 1


def test_pruning_never_expands_more_nodes():
    for seed in range(5):
        g = gnp(16, 0.5, seed)
        pruned_clique, pruned = max_clique_bb(g, prune=True)
        free_clique, free = max_clique_bb(g, prune=False)
        assert pruned_clique == free_clique
        assert pruned.expansions <= free.expansions
        assert free.prunes == 0
        assert pruned.prunes > 0
