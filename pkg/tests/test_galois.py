"""Irreducible orderings, Galois graphs, and orthogonal-pair reconstruction."""

import pytest

from bubblelattice.bubble import extremal_chain_words
from bubblelattice.errors import NotExtremal
from bubblelattice.galois import (
    GaloisGraph,
    bubble_galois_explicit,
    galois_graph,
    galois_graph_sd,
    max_orthogonal_pairs,
    order_irreducibles,
)
from bubblelattice.hochschild import hochschild_lattice
from bubblelattice.labeling import BubbleLabel, lambda_bubble
from bubblelattice.posets import FinitePoset, is_isomorphic

from conftest import splits

X, Y, XY = BubbleLabel.xlab, BubbleLabel.ylab, BubbleLabel.pairlab


def chain_poset(k):
    return FinitePoset(k + 1, [(i, i + 1) for i in range(k)])


def boolean_poset(n):
    return FinitePoset.from_leq(2 ** n, lambda i, j: i & j == i)


def label_map(family, ordering):
    P = family.poset
    return {
        s + 1: lambda_bubble(
            family.words[P.down_adj[ordering.jseq[s]][0]],
            family.words[ordering.jseq[s]],
        )
        for s in range(ordering.k)
    }


class TestOrdering:
    def test_bubble_21_k(self, bubble):
        ordering = order_irreducibles(bubble(2, 1).poset)
        assert ordering.k == 5

    def test_identities_asserted_on_22(self, bubble):
        # order_irreducibles itself verifies the prefix-join and suffix-meet
        # identities for every step; reaching here means they held
        ordering = order_irreducibles(bubble(2, 2).poset)
        assert len(set(ordering.jseq)) == ordering.k == 8

    @pytest.mark.parametrize("m,n", [(2, 1), (2, 2), (3, 1)])
    def test_different_chains_give_same_labeled_graph(self, m, n, bubble):
        # the orderings differ between chains, but after identifying vertex
        # s with the label of its join-irreducible the graphs coincide
        family = bubble(m, n)
        seed = [family.index(u) for u in extremal_chain_words(m, n)]
        o1 = order_irreducibles(family.poset, chain=seed)
        o2 = order_irreducibles(family.poset)
        g1 = galois_graph(family.poset, o1).relabeled(label_map(family, o1))
        g2 = galois_graph(family.poset, o2).relabeled(label_map(family, o2))
        assert g1.arcs == g2.arcs and set(g1.vertices) == set(g2.vertices)

    def test_chain_lattice_ordering(self):
        P = chain_poset(4)
        ordering = order_irreducibles(P)
        assert ordering.jseq == (1, 2, 3, 4)
        assert ordering.mseq == (0, 1, 2, 3)

    def test_non_extremal_rejected(self):
        P = FinitePoset(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        with pytest.raises(NotExtremal):
            order_irreducibles(P)


class TestGaloisGraphs:
    def test_bubble_21_arcs(self, bubble):
        family = bubble(2, 1)
        ordering = order_irreducibles(family.poset)
        G = galois_graph(family.poset, ordering)
        relabeled = G.relabeled(label_map(family, ordering))
        assert relabeled.arcs == {
            (X(1), XY(1, 1)),
            (X(2), XY(2, 1)),
            (XY(1, 1), Y(1)),
            (XY(2, 1), Y(1)),
            (XY(1, 1), XY(2, 1)),
        }

    def test_chain_lattice_arcs_point_down(self):
        # j_s below m_t exactly when s < t, so arcs go strictly downward;
        # reconstruction returns the chain, confirming the orientation
        P = chain_poset(3)
        ordering = order_irreducibles(P)
        G = galois_graph(P, ordering)
        assert G.arcs == {(s, t) for s in range(1, 4) for t in range(1, 4) if s > t}
        mop = max_orthogonal_pairs(G)
        assert is_isomorphic(mop.poset, P) is not None

    def test_boolean_graph_arcless(self):
        P = boolean_poset(3)
        G = galois_graph(P, order_irreducibles(P))
        assert G.arcs == frozenset()

    @pytest.mark.parametrize("m,n", splits(4))
    def test_sd_shortcut_agrees(self, m, n, bubble):
        family = bubble(m, n)
        ordering = order_irreducibles(family.poset)
        assert galois_graph(family.poset, ordering).arcs == galois_graph_sd(
            family.poset, ordering
        ).arcs

    def test_sd_shortcut_on_boolean(self):
        P = boolean_poset(3)
        ordering = order_irreducibles(P)
        assert galois_graph(P, ordering).arcs == galois_graph_sd(P, ordering).arcs

    def test_no_self_loops_allowed(self):
        with pytest.raises(ValueError):
            GaloisGraph((1, 2), frozenset({(1, 1)}))


class TestExplicitGraph:
    def test_vertices_21(self):
        G = bubble_galois_explicit(2, 1)
        assert set(G.vertices) == {X(1), X(2), Y(1), XY(1, 1), XY(2, 1)}

    def test_y_vertices_have_no_arcs_from_x(self):
        G = bubble_galois_explicit(3, 2)
        for a, b in G.arcs:
            if b.kind == "y":
                assert a.kind == "xy"
            assert a.kind != "y"    # y-vertices emit nothing
            assert b.kind != "x"    # x-vertices absorb nothing

    def test_pair_block_transitive(self):
        G = bubble_galois_explicit(3, 3)
        pair_arcs = {(a, b) for a, b in G.arcs if a.kind == b.kind == "xy"}
        for a, b in pair_arcs:
            for c, d in pair_arcs:
                if b == c:
                    assert (a, d) in pair_arcs

    @pytest.mark.parametrize("m,n", splits(4))
    def test_matches_generic_by_labels(self, m, n, bubble):
        family = bubble(m, n)
        ordering = order_irreducibles(family.poset)
        relabeled = galois_graph(family.poset, ordering).relabeled(
            label_map(family, ordering)
        )
        explicit = bubble_galois_explicit(m, n)
        assert set(relabeled.vertices) == set(explicit.vertices)
        assert relabeled.arcs == explicit.arcs

    def test_pure_x_family_arcless(self):
        G = bubble_galois_explicit(3, 0)
        assert G.arcs == frozenset() and len(G.vertices) == 3


class TestOrthogonalPairs:
    def test_reconstructs_bubble_21(self, bubble):
        family = bubble(2, 1)
        mop = max_orthogonal_pairs(bubble_galois_explicit(2, 1))
        assert len(mop.pairs) == 12
        assert is_isomorphic(mop.poset, family.poset) is not None

    def test_arcless_graph_gives_boolean(self):
        G = GaloisGraph(tuple(range(4)), frozenset())
        mop = max_orthogonal_pairs(G)
        assert len(mop.pairs) == 16
        extents = {frozenset(a) for a, _ in mop.pairs}
        assert extents == {
            frozenset(s)
            for s in [
                [], [0], [1], [2], [3], [0, 1], [0, 2], [0, 3], [1, 2], [1, 3],
                [2, 3], [0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3], [0, 1, 2, 3],
            ]
        }

    def test_empty_graph(self):
        mop = max_orthogonal_pairs(GaloisGraph((), frozenset()))
        assert mop.pairs == (((), ()),)
        assert mop.poset.n == 1

    def test_pairs_are_orthogonal_and_maximal(self, bubble):
        G = bubble_galois_explicit(2, 2)
        mop = max_orthogonal_pairs(G)
        arcs = G.arcs
        verts = set(G.vertices)
        for A, B in mop.pairs:
            sa, sb = set(A), set(B)
            assert not sa & sb
            assert all((a, b) not in arcs for a in sa for b in sb)
            for v in verts - sa - sb:
                can_join_a = all((a, b) not in arcs for a in sa | {v} for b in sb) and v not in sb
                can_join_b = all((a, b) not in arcs for a in sa for b in sb | {v})
                assert not can_join_a and not can_join_b

    @pytest.mark.parametrize("make", [lambda: chain_poset(4), lambda: boolean_poset(3)])
    def test_reconstruction_zoo(self, make):
        P = make()
        mop = max_orthogonal_pairs(galois_graph(P, order_irreducibles(P)))
        assert is_isomorphic(mop.poset, P) is not None

    def test_reconstruction_triwords(self):
        _, H = hochschild_lattice(4)
        mop = max_orthogonal_pairs(galois_graph(H, order_irreducibles(H)))
        assert is_isomorphic(mop.poset, H) is not None


class TestExports:
    def test_dot(self):
        G = bubble_galois_explicit(1, 1)
        dot = G.to_dot("g")
        assert "digraph g" in dot and "->" in dot

    def test_adjacency_json(self):
        import json

        G = bubble_galois_explicit(1, 1)
        data = json.loads(G.adjacency_json())
        assert set(data) == {"vertices", "arcs"}
        assert len(data["vertices"]) == 3
