import pytest
from hypothesis import given, settings, strategies as st

from ucir import (
    Graph,
    ProductVertexMap,
    VertexCapExceeded,
    VertexSet,
    build_graph,
    categorical_power,
    categorical_product,
    disjoint_union,
    family,
    is_independent,
    neighborhood,
    vertex_cap,
)
from ucir.rng import SplitMix64, random_graph


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


class TestBuildGraph:
    def test_k2(self):
        g = build_graph(2, [(0, 1)])
        assert (g.n, g.m) == (2, 1)

    def test_c5(self):
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        assert (g.n, g.m) == (5, 5)
        assert g == family("cycle", [5])

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            build_graph(3, [(0, 0)])

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            build_graph(0, [])

    def test_out_of_range_endpoint(self):
        with pytest.raises(ValueError, match="endpoint"):
            build_graph(2, [(0, 2)])

    def test_symmetrized_and_deduplicated(self):
        g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1
        assert g.has_edge(0, 1) and g.has_edge(1, 0)


class TestVertexSet:
    def test_validation(self):
        with pytest.raises(ValueError):
            VertexSet.of(3, [3])

    def test_set_algebra(self):
        a = VertexSet.of(5, [0, 1])
        b = VertexSet.of(5, [1, 2])
        assert (a | b).sorted() == [0, 1, 2]
        assert (a & b).sorted() == [1]
        assert (a - b).sorted() == [0]
        assert a <= (a | b)
        assert not a.isdisjoint(b)

    def test_owner_mismatch(self):
        with pytest.raises(ValueError, match="different graphs"):
            VertexSet.of(5, [0]) | VertexSet.of(4, [0])

    @given(st.integers(1, 30), st.data())
    @settings(max_examples=50, deadline=None)
    def test_mask_round_trip(self, n, data):
        members = data.draw(st.sets(st.integers(0, n - 1)))
        s = VertexSet.of(n, members)
        assert VertexSet.from_mask(n, s.to_mask()) == s


class TestNeighborhood:
    def test_cycle(self):
        c5 = family("cycle", [5])
        assert neighborhood(c5, VertexSet.of(5, [0, 2])).sorted() == [1, 3, 4]

    def test_k2(self):
        assert neighborhood(family("complete", [2]), VertexSet.of(2, [0])).sorted() == [1]

    def test_edgeless(self):
        g = family("edgeless", [3])
        assert len(neighborhood(g, VertexSet.of(3, [0, 1, 2]))) == 0

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            neighborhood(family("cycle", [5]), VertexSet.of(4, [0]))

    def test_disjoint_from_independent_set(self):
        rng = SplitMix64(5)
        for _ in range(20):
            g = random_graph(rng, 1 + rng.below(8))
            u = VertexSet.of(g.n, [v for v in range(g.n) if rng.next_u64() & 1])
            if is_independent(g, u):
                assert neighborhood(g, u).isdisjoint(u)


class TestIsIndependent:
    def test_examples(self):
        c5 = family("cycle", [5])
        assert is_independent(c5, VertexSet.of(5, [0, 2]))
        assert not is_independent(c5, VertexSet.of(5, [0, 1]))
        assert is_independent(c5, VertexSet.of(5, []))


class TestCategoricalProduct:
    def test_k2_squared(self):
        p = categorical_product(family("complete", [2]), family("complete", [2]))
        assert (p.n, p.m) == (4, 2)
        assert edge_set(p) == {(0, 3), (1, 2)}

    def test_k3_k3_edge_count(self):
        p = categorical_product(family("complete", [3]), family("complete", [3]))
        assert (p.n, p.m) == (9, 18)

    def test_product_with_edgeless(self):
        p = categorical_product(family("complete", [2]), family("edgeless", [3]))
        assert (p.n, p.m) == (6, 0)

    def test_adjacency_rule_exhaustive(self):
        # Product adjacency iff both factor adjacencies, checked pair by pair
        # on random factors and on a full 400-vertex product.
        rng = SplitMix64(11)
        pairs = [(random_graph(rng, 1 + rng.below(6)), random_graph(rng, 1 + rng.below(6)))
                 for _ in range(15)]
        pairs.append((family("cycle", [20]), family("cycle", [20])))
        for g, h in pairs:
            p = categorical_product(g, h)
            pmap = ProductVertexMap(g.n, h.n)
            assert p.n <= 400
            for a in range(p.n):
                x1, y1 = pmap.decode(a)
                for b in range(p.n):
                    x2, y2 = pmap.decode(b)
                    expected = g.has_edge(x1, x2) and h.has_edge(y1, y2)
                    assert p.has_edge(a, b) == expected

    def test_edge_count_formula(self):
        rng = SplitMix64(13)
        for _ in range(25):
            g = random_graph(rng, 1 + rng.below(7))
            h = random_graph(rng, 1 + rng.below(7))
            assert categorical_product(g, h).m == 2 * g.m * h.m

    def test_swap_isomorphism(self):
        rng = SplitMix64(17)
        for _ in range(15):
            g = random_graph(rng, 1 + rng.below(6))
            h = random_graph(rng, 1 + rng.below(6))
            gh = categorical_product(g, h)
            hg = categorical_product(h, g)
            fwd = ProductVertexMap(g.n, h.n)
            rev = ProductVertexMap(h.n, g.n)
            for a in range(gh.n):
                x1, y1 = fwd.decode(a)
                for b in range(gh.n):
                    x2, y2 = fwd.decode(b)
                    assert gh.has_edge(a, b) == hg.has_edge(
                        rev.encode(y1, x1), rev.encode(y2, x2)
                    )

    def test_independent_set_lifts(self, corpus):
        from ucir import max_independent_set

        rng = SplitMix64(19)
        for g in corpus[4] + corpus[5]:
            h = random_graph(rng, 1 + rng.below(5))
            u = max_independent_set(g).witness
            pmap = ProductVertexMap(g.n, h.n)
            lift = VertexSet.of(g.n * h.n, [pmap.encode(x, y) for x in u for y in range(h.n)])
            assert is_independent(categorical_product(g, h), lift)

    def test_cap_enforced(self, monkeypatch):
        monkeypatch.setenv("UCIR_VERTEX_CAP", "8")
        with pytest.raises(VertexCapExceeded):
            categorical_product(family("cycle", [3]), family("cycle", [3]))

    def test_cap_override_env(self, monkeypatch):
        monkeypatch.setenv("UCIR_VERTEX_CAP", "10000")
        assert vertex_cap() == 10000
        monkeypatch.delenv("UCIR_VERTEX_CAP")
        assert vertex_cap() == 4096


class TestCategoricalPower:
    def test_identity(self):
        c5 = family("cycle", [5])
        assert categorical_power(c5, 1) == c5

    def test_square_equals_product(self):
        k2 = family("complete", [2])
        assert categorical_power(k2, 2) == categorical_product(k2, k2)
        k3 = family("complete", [3])
        sq = categorical_power(k3, 2)
        assert (sq.n, sq.m) == (9, 18)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            categorical_power(family("complete", [2]), 0)


class TestDisjointUnion:
    def test_counts(self):
        k2 = family("complete", [2])
        u = disjoint_union(k2, k2)
        assert (u.n, u.m) == (4, 2)
        u2 = disjoint_union(family("edgeless", [1]), family("edgeless", [1]))
        assert (u2.n, u2.m) == (2, 0)
        u3 = disjoint_union(family("cycle", [5]), k2)
        assert (u3.n, u3.m) == (7, 6)

    def test_no_cross_edges(self):
        g = family("cycle", [4])
        h = family("complete", [3])
        u = disjoint_union(g, h)
        for a in range(g.n):
            for b in range(g.n, u.n):
                assert not u.has_edge(a, b)

    def test_preserves_independence(self):
        from ucir import max_independent_set

        g = family("cycle", [5])
        h = family("star", [3])
        wg = max_independent_set(g).witness
        wh = max_independent_set(h).witness
        u = disjoint_union(g, h)
        joined = VertexSet.of(u.n, list(wg) + [g.n + v for v in wh])
        assert is_independent(u, joined)


class TestFamilies:
    def test_complete(self):
        g = family("complete", [4])
        assert (g.n, g.m) == (4, 6)

    def test_complete_multipartite(self):
        g = family("complete_multipartite", [2, 2, 2])
        assert (g.n, g.m) == (6, 12)

    def test_petersen(self):
        g = family("petersen")
        assert (g.n, g.m) == (10, 15)
        assert all(g.degree(v) == 3 for v in range(10))

    def test_star_numbering(self):
        g = family("star", [3])
        assert g.neighbors(0) == [1, 2, 3]

    def test_errors(self):
        with pytest.raises(ValueError, match="unknown family"):
            family("moebius", [5])
        with pytest.raises(ValueError):
            family("cycle", [2])
        with pytest.raises(ValueError):
            family("complete", [])
        with pytest.raises(ValueError):
            family("complete", [0])


class TestProductVertexMap:
    @given(st.integers(1, 20), st.integers(1, 20))
    @settings(max_examples=50, deadline=None)
    def test_bijection(self, nl, nr):
        pmap = ProductVertexMap(nl, nr)
        seen = set()
        for x in range(nl):
            for y in range(nr):
                v = pmap.encode(x, y)
                assert pmap.decode(v) == (x, y)
                seen.add(v)
        assert seen == set(range(nl * nr))
