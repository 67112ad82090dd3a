from fractions import Fraction

import pytest

from ucir import (
    VertexSet,
    categorical_power,
    disjoint_union,
    expansion_from_ratio,
    family,
    for_each_independent_set,
    is_independent,
    local_independence_ratio,
    neighborhood,
    ultimate_independence_ratio,
)
from ucir.naive import best_ratio_by_subset_scan
from ucir.rng import SplitMix64, random_graph

HALF = Fraction(1, 2)


class TestLocalRatio:
    def test_cliques(self):
        for n in range(2, 6):
            value, witness = local_independence_ratio(family("complete", [n]))
            assert value == Fraction(1, n)
            assert len(witness) == 1

    def test_c5(self):
        assert local_independence_ratio(family("cycle", [5])) == (
            Fraction(2, 5),
            VertexSet.of(5, [0, 2]),
        )

    def test_star_leaves(self):
        assert local_independence_ratio(family("star", [3])) == (
            Fraction(3, 4),
            VertexSet.of(4, [1, 2, 3]),
        )

    def test_witness_attains_value(self):
        rng = SplitMix64(59)
        for _ in range(40):
            g = random_graph(rng, 1 + rng.below(9))
            value, witness = local_independence_ratio(g)
            assert witness.members and is_independent(g, witness)
            assert value == Fraction(len(witness), len(witness) + len(neighborhood(g, witness)))

    def test_pruned_equals_naive_corpus(self, corpus):
        for n in range(1, 7):
            for g in corpus[n]:
                assert local_independence_ratio(g)[0] == best_ratio_by_subset_scan(g)[0]

    def test_pruned_equals_naive_random(self):
        rng = SplitMix64(61)
        for _ in range(30):
            g = random_graph(rng, 1 + rng.below(9))
            assert local_independence_ratio(g)[0] == best_ratio_by_subset_scan(g)[0]


class TestCappedAndUltimate:
    def test_c4(self):
        s = ultimate_independence_ratio(family("cycle", [4]))
        assert (s.local_ratio, s.capped_ratio, s.ultimate_ratio) == (HALF, HALF, HALF)

    def test_star(self):
        s = ultimate_independence_ratio(family("star", [3]))
        assert (s.local_ratio, s.capped_ratio, s.ultimate_ratio) == (
            Fraction(3, 4),
            Fraction(1),
            Fraction(1),
        )

    def test_single_vertex(self):
        s = ultimate_independence_ratio(family("edgeless", [1]))
        assert s.local_ratio == 1 and s.ultimate_ratio == 1

    def test_isolated_vertex_forces_one(self):
        g = disjoint_union(family("complete", [4]), family("edgeless", [1]))
        assert ultimate_independence_ratio(g).ultimate_ratio == 1

    def test_chain_inequality(self, corpus):
        from ucir import independence_ratio

        for n in range(1, 7):
            for g in corpus[n]:
                s = ultimate_independence_ratio(g)
                assert independence_ratio(g) <= s.local_ratio <= s.capped_ratio
                assert s.capped_ratio == s.ultimate_ratio


class TestExpansion:
    def test_values(self):
        assert expansion_from_ratio(HALF) == 1
        assert expansion_from_ratio(Fraction(2, 5)) == Fraction(3, 2)
        assert expansion_from_ratio(Fraction(1)) == 0

    def test_domain(self):
        with pytest.raises(ValueError):
            expansion_from_ratio(Fraction(0))
        with pytest.raises(ValueError):
            expansion_from_ratio(Fraction(3, 2))

    def test_threshold(self):
        assert expansion_from_ratio(Fraction(1, 3)) >= 1
        assert expansion_from_ratio(Fraction(2, 3)) < 1

    def test_equals_min_neighborhood_expansion(self, corpus):
        # (1 - a)/a equals the minimum of |N(U)|/|U| over nonempty independent U.
        for n in range(1, 6):
            for g in corpus[n]:
                best = [None]

                def visit(u, r):
                    if u.members:
                        value = Fraction(len(neighborhood(g, u)), len(u))
                        if best[0] is None or value < best[0]:
                            best[0] = value
                    return True

                for_each_independent_set(g, visit)
                summary = ultimate_independence_ratio(g)
                assert best[0] == summary.expansion


class TestSquaring:
    def test_local_ratio_never_drops(self, small_graphs):
        for g in small_graphs:
            base, _ = local_independence_ratio(g)
            squared, _ = local_independence_ratio(categorical_power(g, 2))
            assert squared >= base

    def test_capped_ratio_invariant(self, small_graphs):
        for g in small_graphs:
            base = ultimate_independence_ratio(g)
            squared = ultimate_independence_ratio(categorical_power(g, 2))
            assert squared.capped_ratio == base.capped_ratio
            if base.local_ratio <= HALF:
                assert squared.local_ratio == base.local_ratio
            else:
                assert squared.local_ratio > HALF


class TestUnionRule:
    def test_union_takes_max(self):
        rng = SplitMix64(67)
        for _ in range(25):
            g = random_graph(rng, 1 + rng.below(6))
            h = random_graph(rng, 1 + rng.below(6))
            merged, _ = local_independence_ratio(disjoint_union(g, h))
            assert merged == max(
                local_independence_ratio(g)[0], local_independence_ratio(h)[0]
            )
