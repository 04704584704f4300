"""Reconstruction of the 1957 Harary-Ross matrix procedure for clique
detection, kept deliberately faithful to its documented failure mode.

The method works on the triangle-support matrix t = A o A^2 (entrywise
product of the adjacency matrix with its square, restricted to edges):
t[i][j] counts the triangles through edge (i, j). Vertices lying in no
triangle are discarded, unicliqual vertices are peeled one at a time, and
whatever irreducible residue is left is emitted as connected components.

Harary himself later acknowledged that the 1957 procedure finds every
clique of a graph but occasionally reports other subgraphs too. This
reconstruction keeps that behavior observable: every emitted set is
classified against the modern maximality predicate and the failures are
quarantined in ``spurious`` instead of being silenced. The residual
fallback is an explicit reconstruction choice, the surviving sources do
not describe the original residual handling; per-set provenance flags
make the two phases auditable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import Clique, Graph, bits, canonicalize, is_clique, is_maximal_clique
from .reports import (
    FLAG_RESIDUAL_FALLBACK,
    FLAG_SPURIOUS_PRESENT,
    PROV_PEELED,
    PROV_RESIDUAL_FALLBACK,
    CliqueReport,
    make_report,
)


@dataclass(frozen=True)
class TriangleSupport:
    """t[i][j] = number of triangles containing edge (i, j); 0 off edges."""

    t: tuple[tuple[int, ...], ...]

    def support(self, u: int, v: int) -> int:
        return self.t[u][v]


def triangle_support(g: Graph) -> TriangleSupport:
    """Triangle counts per edge: |N(i) & N(j)| where (i, j) is an edge, else 0."""
    rows = []
    for i in range(g.n):
        row = [0] * g.n
        for j in bits(g.adj[i]):
            row[j] = (g.adj[i] & g.adj[j]).bit_count()
        rows.append(tuple(row))
    return TriangleSupport(t=tuple(rows))


def cliqual_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices lying in at least one triangle, ascending."""
    ts = triangle_support(g)
    return tuple(v for v in range(g.n) if any(ts.t[v]))


@dataclass(frozen=True)
class HistoricalReport:
    """Emitted sets of the reconstruction plus their classification.

    ``flags`` maps each emitted set to its provenance (PEELED or
    RESIDUAL_FALLBACK); ``spurious`` lists the emitted sets that fail the
    clique or maximality predicate on the original graph. Sets not in
    ``spurious`` are genuine maximal cliques.
    """

    cliques: tuple[Clique, ...]
    flags: dict[Clique, tuple[str, ...]]
    spurious: tuple[Clique, ...]

    @property
    def true_cliques(self) -> tuple[Clique, ...]:
        bad = set(self.spurious)
        return tuple(c for c in self.cliques if c not in bad)


def _support_in(adj: list[int], alive: int) -> dict[int, dict[int, int]]:
    t: dict[int, dict[int, int]] = {}
    for v in bits(alive):
        row = {}
        nb = adj[v] & alive
        for u in bits(nb):
            row[u] = (adj[v] & adj[u] & alive).bit_count()
        t[v] = row
    return t


def _components(adj: list[int], alive: int) -> list[int]:
    comps = []
    todo = alive
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v] & alive & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        todo &= ~comp
    return comps


def harary_ross_reconstruction(g: Graph) -> HistoricalReport:
    """Run the reconstructed 1957 procedure and classify its output.

    Loop: drop triangle-free vertices, then peel the smallest unicliqual
    vertex v (its positive-support co-neighbors pairwise adjacent),
    recording v plus those co-neighbors; the support matrix is recomputed
    from scratch after every deletion. An irreducible non-empty residue is
    emitted as connected components flagged RESIDUAL_FALLBACK.
    """
    adj = list(g.adj)
    alive = g.vertex_mask()
    emitted: list[tuple[Clique, str]] = []
    while True:
        t = _support_in(adj, alive)
        cliqual = 0
        for v in bits(alive):
            if any(t[v].values()):
                cliqual |= 1 << v
        alive = cliqual
        if not alive:
            break
        peeled = None
        for v in bits(alive):
            co = 0
            for u, cnt in t[v].items():
                if cnt > 0 and alive >> u & 1:
                    co |= 1 << u
            if _pairwise_adjacent(adj, co):
                peeled = (v, co)
                break
        if peeled is None:
            for comp in _components(adj, alive):
                emitted.append((tuple(bits(comp)), PROV_RESIDUAL_FALLBACK))
            break
        v, co = peeled
        emitted.append((tuple(bits(co | (1 << v))), PROV_PEELED))
        alive ^= 1 << v

    flags: dict[Clique, tuple[str, ...]] = {}
    for members, prov in emitted:
        have = flags.get(members, ())
        if prov not in have:
            flags[members] = tuple(sorted(have + (prov,)))
    cliques = tuple(canonicalize(flags))
    spurious = tuple(
        c
        for c in cliques
        if not (is_clique(g, c) and is_maximal_clique(g, c))
    )
    return HistoricalReport(cliques=cliques, flags=flags, spurious=spurious)


def _pairwise_adjacent(adj: list[int], mask: int) -> bool:
    for u in bits(mask):
        if mask & ~adj[u] & ~(1 << u):
            return False
    return True


def harary_report(g: Graph, min_size: int = 1) -> CliqueReport:
    """Adapter: run the reconstruction and package it as a CliqueReport."""
    start = time.perf_counter_ns()
    hist = harary_ross_reconstruction(g)
    elapsed_us = (time.perf_counter_ns() - start) // 1000
    report_flags = []
    if hist.spurious:
        report_flags.append(FLAG_SPURIOUS_PRESENT)
    if any(PROV_RESIDUAL_FALLBACK in f for f in hist.flags.values()):
        report_flags.append(FLAG_RESIDUAL_FALLBACK)
    return make_report(
        "harary1957", g, hist.cliques, min_size, elapsed_us, tuple(report_flags)
    )
