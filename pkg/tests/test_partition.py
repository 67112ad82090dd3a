from fractions import Fraction

import pytest

from ucir import (
    ProductVertexMap,
    VertexSet,
    categorical_product,
    family,
    lifted_neighborhood,
    local_independence_ratio,
    mate_partition,
    max_independent_set,
    neighborhood,
    product_neighborhood,
    refined_partition,
    section,
    verify_boundary_chain,
    verify_partition_laws,
)
from ucir.rng import SplitMix64, random_graph, random_maximal_independent_set

HALF = Fraction(1, 2)


def lift(pmap: ProductVertexMap, pairs) -> VertexSet:
    return VertexSet.of(pmap.size, [pmap.encode(x, y) for x, y in pairs])


class TestMatePartition:
    def test_crossed_independent_set_is_all_free(self):
        g, h = family("cycle", [5]), family("cycle", [4])
        pmap = ProductVertexMap(g.n, h.n)
        u = lift(pmap, [(x, y) for x in (0, 2) for y in range(4)])
        free, tied = mate_partition(g, h, u)
        assert free.members == u.members and len(tied) == 0

    def test_both_rows_of_k2_all_tied(self):
        g, h = family("complete", [2]), family("cycle", [4])
        pmap = ProductVertexMap(2, 4)
        u = lift(pmap, [(x, y) for x in (0, 1) for y in (0, 2)])
        free, tied = mate_partition(g, h, u)
        assert len(free) == 0 and tied.members == u.members

    def test_empty_set(self):
        g, h = family("complete", [2]), family("complete", [2])
        free, tied = mate_partition(g, h, VertexSet.of(4, []))
        assert len(free) == 0 and len(tied) == 0

    def test_non_independent_rejected(self):
        # The diagonal {(0,0),(1,1)} of K2 x K2 is an edge of the product.
        g = family("complete", [2])
        with pytest.raises(ValueError, match="not independent"):
            mate_partition(g, g, VertexSet.of(4, [0, 3]))


class TestSection:
    def test_h_sections(self):
        pmap = ProductVertexMap(5, 4)
        z = VertexSet.of(20, [pmap.encode(0, 1), pmap.encode(2, 1)])
        assert section(pmap, z, "H", 1).sorted() == [0, 2]
        assert section(pmap, z, "H", 0).sorted() == []

    def test_g_section(self):
        pmap = ProductVertexMap(5, 4)
        z = VertexSet.of(20, [pmap.encode(0, 1), pmap.encode(0, 3)])
        assert section(pmap, z, "G", 0).sorted() == [1, 3]

    def test_errors(self):
        pmap = ProductVertexMap(3, 3)
        z = VertexSet.of(9, [])
        with pytest.raises(ValueError, match="out of range"):
            section(pmap, z, "H", 3)
        with pytest.raises(ValueError, match="axis"):
            section(pmap, z, "X", 0)


class TestLiftedNeighborhood:
    def test_single_section(self):
        g, h = family("cycle", [5]), family("cycle", [4])
        pmap = ProductVertexMap(5, 4)
        z = lift(pmap, [(0, 2)])
        assert lifted_neighborhood(g, h, z, "G") == lift(pmap, [(1, 2), (4, 2)])
        assert lifted_neighborhood(g, h, z, "H") == lift(pmap, [(0, 1), (0, 3)])

    def test_empty(self):
        g = family("complete", [2])
        z = VertexSet.of(4, [])
        assert len(lifted_neighborhood(g, g, z, "G")) == 0

    def test_k2_square(self):
        g = family("complete", [2])
        pmap = ProductVertexMap(2, 2)
        z = lift(pmap, [(0, 0)])
        assert lifted_neighborhood(g, g, z, "G") == lift(pmap, [(1, 0)])
        assert lifted_neighborhood(g, g, z, "H") == lift(pmap, [(0, 1)])

    def test_matches_per_section_definition(self):
        rng = SplitMix64(89)
        for _ in range(20):
            g = random_graph(rng, 1 + rng.below(5))
            h = random_graph(rng, 1 + rng.below(5))
            pmap = ProductVertexMap(g.n, h.n)
            members = [v for v in range(pmap.size) if rng.next_u64() & 1]
            z = VertexSet.of(pmap.size, members)
            lifted = lifted_neighborhood(g, h, z, "G")
            for y in range(h.n):
                expected = neighborhood(g, section(pmap, z, "H", y))
                assert section(pmap, lifted, "H", y) == expected


class TestRefinedPartition:
    def test_crossed_set_with_no_isolated_h(self):
        g, h = family("cycle", [5]), family("cycle", [4])
        pmap = ProductVertexMap(5, 4)
        u = lift(pmap, [(x, y) for x in (0, 2) for y in range(4)])
        parts = refined_partition(g, h, u)
        assert parts.tied_h_only.members == u.members
        assert len(parts.tied_g_only) == 0 and len(parts.free_both) == 0

    def test_singleton_is_free_both(self):
        g, h = family("cycle", [5]), family("cycle", [4])
        pmap = ProductVertexMap(5, 4)
        u = lift(pmap, [(1, 2)])
        parts = refined_partition(g, h, u)
        assert parts.free_both.members == u.members

    def test_empty_set(self):
        g = family("complete", [2])
        parts = refined_partition(g, g, VertexSet.of(4, []))
        for piece in (
            parts.free_g, parts.tied_g, parts.tied_h_only, parts.tied_g_only,
            parts.free_both, parts.spill, parts.bound_g, parts.bound_h,
        ):
            assert len(piece) == 0

    def test_refines_coarse(self):
        rng = SplitMix64(97)
        for _ in range(50):
            g = random_graph(rng, 1 + rng.below(6))
            h = random_graph(rng, 1 + rng.below(6))
            product = categorical_product(g, h)
            u = random_maximal_independent_set(rng, product)
            parts = refined_partition(g, h, u)
            free, tied = mate_partition(g, h, u)
            assert parts.free_g == free and parts.tied_g == tied
            assert (parts.tied_h_only | parts.free_both).members == free.members
            assert parts.tied_g_only.members == tied.members


class TestCertificates:
    def test_laws_on_maximum_sets(self):
        g = family("cycle", [5])
        product = categorical_product(g, g)
        u = max_independent_set(product).witness
        assert verify_partition_laws(g, g, u).ok

    def test_laws_on_crossed_and_empty_sets(self):
        g, h = family("cycle", [5]), family("cycle", [4])
        pmap = ProductVertexMap(5, 4)
        u = lift(pmap, [(x, y) for x in (0, 2) for y in range(4)])
        assert verify_partition_laws(g, h, u).ok
        assert verify_partition_laws(g, h, VertexSet.of(20, [])).ok

    def test_chain_on_local_ratio_witness(self):
        g = family("cycle", [5])
        product = categorical_product(g, g)
        _, witness = local_independence_ratio(product)
        cert = verify_boundary_chain(g, g, witness)
        assert cert.ok
        assert cert.named("expansion-conclusion").status == "pass"
        # conclusion with both expansions 3/2: |N(U)| >= (3/2)|U|
        nbhd = product_neighborhood(g, g, witness)
        assert Fraction(len(nbhd)) >= Fraction(3, 2) * len(witness)

    def test_chain_on_k2_row(self):
        k2 = family("complete", [2])
        u = VertexSet.of(4, [0, 1])  # one row of K2 x K2
        cert = verify_boundary_chain(k2, k2, u)
        assert cert.ok and cert.named("expansion-conclusion").status == "pass"

    def test_conclusion_skipped_when_both_ratios_large(self):
        star = family("star", [3])
        pmap = ProductVertexMap(4, 4)
        u = lift(pmap, [(1, 1)])
        cert = verify_boundary_chain(star, star, u)
        assert cert.ok
        assert cert.named("expansion-conclusion").status == "skipped"

    def test_empty_set_rejected(self):
        k2 = family("complete", [2])
        with pytest.raises(ValueError, match="nonempty"):
            verify_boundary_chain(k2, k2, VertexSet.of(4, []))

    def test_diagonal_of_k2_square_rejected(self):
        k2 = family("complete", [2])
        with pytest.raises(ValueError, match="not independent"):
            verify_boundary_chain(k2, k2, VertexSet.of(4, [0, 3]))


class TestRandomInstances:
    def test_certificates_on_seeded_maximal_sets(self):
        rng = SplitMix64(101)
        for _ in range(200):
            g = random_graph(rng, 1 + rng.below(6))
            h = random_graph(rng, 1 + rng.below(6))
            product = categorical_product(g, h)
            u = random_maximal_independent_set(rng, product)
            assert verify_partition_laws(g, h, u).ok
            cert = verify_boundary_chain(g, h, u)
            assert cert.ok, cert.failures()
            parts = refined_partition(g, h, u)
            assert parts.spill.isdisjoint(parts.neighborhood)
            assert parts.bound_h <= parts.neighborhood
            assert parts.bound_g.isdisjoint(parts.bound_h)

    def test_mediant_bound_gives_product_ratio_theorem(self):
        # |U| / (n_G n_H) <= max(local ratios) via the four disjoint classes.
        rng = SplitMix64(103)
        for _ in range(40):
            g = random_graph(rng, 1 + rng.below(5))
            h = random_graph(rng, 1 + rng.below(5))
            product = categorical_product(g, h)
            u = max_independent_set(product).witness
            if not u.members:
                continue
            parts = refined_partition(g, h, u)
            mediant = Fraction(len(u), len(u) + len(parts.lifted_g) + len(parts.lifted_h))
            bound = max(local_independence_ratio(g)[0], local_independence_ratio(h)[0])
            assert Fraction(len(u), product.n) <= mediant <= bound
