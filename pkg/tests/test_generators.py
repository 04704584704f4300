"""Generator determinism, guards, and structural invariants."""

from __future__ import annotations

import hashlib

import pytest

from cliquetrace import (
    GraphError,
    GuardError,
    SplitMix64,
    bk_pivot,
    degeneracy_ordering,
    gnp,
    moon_moser,
    named,
    parse_gen_spec,
    random_ktree,
    simplicial_reduction,
)

# Reference outputs of the splitmix64 C code (Vigna's public-domain version).
SPLITMIX_VECTORS = {
    0: (16294208416658607535, 7960286522194355700, 487617019471545679),
    42: (13679457532755275413, 2949826092126892291, 5139283748462763858),
    123456789: (2466975172287755897, 8832083440362974766, 3534771765162737125),
}

# Golden edge-set digests guarding cross-platform gnp reproducibility.
GNP_DIGESTS = {
    (20, 0.3, 1): "ed512ed3c5a63cc55703452399ba9daed9b6f67a371d127e0f9893cd14be24e2",
    (16, 0.5, 7): "27be02edac45b132a5ab74c3bdbcbe09c6c98fdafbed5b73e1955840a9ed1626",
    (12, 0.8, 42): "165fe4f2c1939624e15edd741ebc33283b2446af83e1714ba87758ff0ec7c00d",
}


class TestSplitMix64:
    @pytest.mark.parametrize("seed,expected", sorted(SPLITMIX_VECTORS.items()))
    def test_reference_vectors(self, seed, expected):
        rng = SplitMix64(seed)
        assert tuple(rng.next_u64() for _ in range(3)) == expected

    def test_below_requires_positive_bound(self):
        with pytest.raises(ValueError):
            SplitMix64(0).below(0)


class TestMoonMoser:
    def test_k1_is_three_isolated_vertices(self):
        g = moon_moser(1)
        assert g.n == 3 and g.m == 0

    def test_k2_shape(self):
        g = moon_moser(2)
        assert g.n == 6 and g.m == 9
        rep = bk_pivot(g)
        assert len(rep.cliques) == 9
        assert all(len(c) == 2 for c in rep.cliques)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_structure_and_clique_count(self, k):
        g = moon_moser(k)
        assert g.n == 3 * k
        assert g.m == 9 * k * (k - 1) // 2
        rep = bk_pivot(g)
        assert len(rep.cliques) == 3**k
        assert max(rep.census) == k

    def test_guard(self):
        with pytest.raises(GuardError):
            moon_moser(21)
        with pytest.raises(GuardError):
            moon_moser(0)


class TestGnp:
    def test_p0_empty(self):
        assert gnp(10, 0.0, 3).m == 0

    def test_p1_complete(self):
        assert gnp(10, 1.0, 3).m == 45

    def test_determinism(self):
        assert gnp(10, 0.5, 42).adj == gnp(10, 0.5, 42).adj

    def test_invalid_p(self):
        with pytest.raises(GraphError):
            gnp(5, 1.5, 0)

    @pytest.mark.parametrize("key,digest", sorted(GNP_DIGESTS.items()))
    def test_golden_edge_digests(self, key, digest):
        n, p, seed = key
        g = gnp(n, p, seed)
        text = ";".join(f"{u},{v}" for u, v in g.edges())
        assert hashlib.sha256(text.encode()).hexdigest() == digest


class TestRandomKtree:
    def test_minimum_is_complete(self):
        g = random_ktree(4, 3, 0)
        assert g.m == 6

    def test_output_is_chordal(self):
        for seed in range(5):
            g = random_ktree(12, 3, seed)
            assert simplicial_reduction(g).residual.n == 0

    def test_degeneracy_equals_k(self):
        assert degeneracy_ordering(random_ktree(8, 2, 7)).degeneracy == 2

    def test_invalid_params(self):
        with pytest.raises(GraphError):
            random_ktree(3, 3, 0)
        with pytest.raises(GraphError):
            random_ktree(5, 0, 0)


class TestNamed:
    def test_cycle3_equals_complete3(self):
        assert named("cycle", 3).adj == named("complete", 3).adj

    def test_star_counts_leaves(self):
        g = named("star", 4)
        assert g.n == 5 and g.m == 4
        assert g.degree(0) == 4

    def test_empty(self):
        assert named("empty", 5).m == 0

    def test_cycle_needs_three(self):
        with pytest.raises(GraphError):
            named("cycle", 2)

    def test_unknown_kind(self):
        with pytest.raises(GraphError):
            named("wheel", 5)


class TestGenSpec:
    def test_moonmoser(self):
        assert parse_gen_spec("moonmoser:k=2").n == 6

    def test_gnp_roundtrip(self):
        assert parse_gen_spec("gnp:n=10,p=0.5,seed=1").adj == gnp(10, 0.5, 1).adj

    def test_named(self):
        assert parse_gen_spec("empty:n=7").n == 7

    def test_bad_spec(self):
        with pytest.raises(GraphError):
            parse_gen_spec("gnp:n=10")
        with pytest.raises(GraphError):
            parse_gen_spec("lattice:n=4")
        with pytest.raises(GraphError):
            parse_gen_spec("gnp:n=ten,p=0.5,seed=1")
