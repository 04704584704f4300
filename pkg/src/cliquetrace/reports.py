"""Report containers produced by the algorithms and consumed by the harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Clique, Graph, canonicalize

# Report-level flags.
FLAG_SPURIOUS_PRESENT = "SPURIOUS_PRESENT"
FLAG_RESIDUAL_FALLBACK = "RESIDUAL_FALLBACK"
FLAG_CENSUS_PATH = "CENSUS_PATH"

# Per-set provenance in historical reconstructions.
PROV_PEELED = "PEELED"
PROV_RESIDUAL_FALLBACK = "RESIDUAL_FALLBACK"


@dataclass(frozen=True)
class CliqueReport:
    """One algorithm run: canonical clique list, census, timing, flags."""

    algorithm: str
    n: int
    m: int
    cliques: tuple[Clique, ...]
    census: dict[int, int]
    elapsed_us: int = 0
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        assert sum(self.census.values()) == len(self.cliques)


def census_of(cliques: Iterable[Clique]) -> dict[int, int]:
    """Histogram of clique sizes, keyed by size in descending order."""
    counts: dict[int, int] = {}
    for c in cliques:
        counts[len(c)] = counts.get(len(c), 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: -kv[0]))


def make_report(
    algorithm: str,
    g: Graph,
    cliques: Iterable[Iterable[int]],
    min_size: int = 1,
    elapsed_us: int = 0,
    flags: Sequence[str] = (),
) -> CliqueReport:
    """Canonicalize, apply the min-size output filter, and build the report."""
    if min_size < 1:
        raise ValueError(f"min_size must be >= 1, got {min_size}")
    canon = tuple(c for c in canonicalize(cliques) if len(c) >= min_size)
    return CliqueReport(
        algorithm=algorithm,
        n=g.n,
        m=g.m,
        cliques=canon,
        census=census_of(canon),
        elapsed_us=elapsed_us,
        flags=tuple(flags),
    )


@dataclass(frozen=True)
class MotifCensus:
    """Counts of simple cycles, chains (paths), and induced stars by size."""

    n: int
    m: int
    cycles: dict[int, int] = field(default_factory=dict)
    chains: dict[int, int] = field(default_factory=dict)
    stars: dict[int, int] = field(default_factory=dict)


# Witness classifications in a cross-algorithm comparison.
AGREED = "agreed"
TRUE_CLIQUE = "true-clique"
SPURIOUS = "spurious"


@dataclass(frozen=True)
class DiffRow:
    """One canonical clique row of the agreement matrix."""

    clique: Clique
    present: dict[str, bool]
    classification: str

    @property
    def is_witness(self) -> bool:
        return self.classification != AGREED


@dataclass(frozen=True)
class DiffReport:
    """Cross-algorithm agreement: per-algorithm reports, presence matrix,
    and disagreement witnesses with their classification."""

    n: int
    m: int
    min_size: int
    algorithms: tuple[str, ...]
    reports: dict[str, CliqueReport]
    rows: tuple[DiffRow, ...]
    witnesses: tuple[Clique, ...]
